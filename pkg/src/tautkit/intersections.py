"""Top intersections of psi and lambda classes on moduli of stable curves.

Two independent routes are provided:

* ``witten_correlator`` fills a table of <tau_k1 ... tau_kn>_g from the
  genus-0 multinomial formula, the string and dilaton equations and the
  KdV equation in correlator form;
* ``hodge_from_hurwitz`` interpolates brute-force Hurwitz numbers to read
  off every integral of psi^a lambda_k from the polynomial P_{g,n}.

``elsv_forward`` evaluates the ELSV sum from a list of Hodge integrals so
the second route can be audited against the Hurwitz counts.
"""
from __future__ import annotations

import os
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial, prod
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import InsufficientSamplesError, TautkitError
from .exact import (
    Exponents,
    Partition,
    SymmetricPolySample,
    eval_monomial,
    monomials,
    multinomial,
    rh_branch_count,
    solve_monomial_coefficients,
)
from .hurwitz import DEFAULT_MAX_BRANCH, DEFAULT_MAX_DEGREE, hurwitz_bruteforce


class CorrelatorError(TautkitError, ValueError):
    pass


class MissingHodgeError(TautkitError, KeyError):
    pass


def is_stable_gn(g: int, n: int) -> bool:
    return g >= 0 and n >= 0 and 2 * g - 2 + n > 0


@dataclass(frozen=True, order=True)
class CorrelatorKey:
    """<tau_{k_1} ... tau_{k_n}>_g with exponents stored sorted."""

    g: int
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(sorted(int(k) for k in self.exps))
        if any(k < 0 for k in exps):
            raise CorrelatorError(f"negative psi exponent in {exps}")
        object.__setattr__(self, "exps", exps)
        if not is_stable_gn(self.g, len(exps)):
            raise CorrelatorError(f"(g, n) = ({self.g}, {len(exps)}) is not stable")

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def dimension(self) -> int:
        return 3 * self.g - 3 + self.n

    def is_dimensional(self) -> bool:
        return sum(self.exps) == self.dimension

    def __str__(self) -> str:
        inner = "".join(f"t{k}" for k in self.exps)
        return f"<{inner}>_{self.g}"


# --------------------------------------------------------------------------
# correlator table


class IntersectionTable:
    """Append-only map CorrelatorKey -> Fraction, optionally backed by a text
    file with one ``g;k1,k2,...;p/q`` line per entry."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.entries: dict[CorrelatorKey, Fraction] = {}
        self.path = Path(path) if path is not None else None
        self._unsaved: list[CorrelatorKey] = []
        if self.path is not None and self.path.exists():
            self.load(self.path)

    def __contains__(self, key: CorrelatorKey) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, key: CorrelatorKey) -> Fraction | None:
        return self.entries.get(key)

    def put(self, key: CorrelatorKey, value: Fraction) -> None:
        value = Fraction(value)
        old = self.entries.get(key)
        if old is not None:
            if old != value:
                raise CorrelatorError(f"conflicting values for {key}: {old} vs {value}")
            return
        if value != 0 and not key.is_dimensional():
            raise CorrelatorError(f"nonzero value stored for off-dimension key {key}")
        self.entries[key] = value
        self._unsaved.append(key)

    @staticmethod
    def format_line(key: CorrelatorKey, value: Fraction) -> str:
        return f"{key.g};{','.join(map(str, key.exps))};{value.numerator}/{value.denominator}\n"

    @staticmethod
    def parse_line(line: str) -> tuple[CorrelatorKey, Fraction]:
        g, exps, val = line.strip().split(";")
        ks = tuple(int(x) for x in exps.split(",")) if exps else ()
        return CorrelatorKey(int(g), ks), Fraction(val)

    def load(self, path: str | os.PathLike) -> None:
        with open(path, encoding="ascii") as fh:
            for line in fh:
                if line.strip():
                    key, value = self.parse_line(line)
                    self.put(key, value)
        self._unsaved.clear()

    def flush(self) -> int:
        """Append entries computed since the last flush; returns how many."""
        if self.path is None:
            self._unsaved.clear()
            return 0
        with open(self.path, "a", encoding="ascii") as fh:
            for key in sorted(self._unsaved):
                fh.write(self.format_line(key, self.entries[key]))
        n = len(self._unsaved)
        self._unsaved.clear()
        return n

    def items(self) -> Iterator[tuple[CorrelatorKey, Fraction]]:
        return iter(sorted(self.entries.items()))


_DEFAULT_TABLE = IntersectionTable()


def default_table() -> IntersectionTable:
    return _DEFAULT_TABLE


# --------------------------------------------------------------------------
# closed forms and reductions


def psi_genus0(a: Sequence[int]) -> Fraction:
    """Multinomial (n-3; a_1, ..., a_n) on M_{0,n}-bar, zero off dimension."""
    a = tuple(a)
    n = len(a)
    if n < 3:
        raise CorrelatorError("M_{0,n}-bar needs n >= 3")
    if any(x < 0 for x in a) or sum(a) != n - 3:
        return Fraction(0)
    return Fraction(multinomial(a))


def _as_key(key_or_g, exps=None) -> CorrelatorKey:
    if isinstance(key_or_g, CorrelatorKey):
        return key_or_g
    return CorrelatorKey(key_or_g, tuple(exps))


def string_reduce(key: CorrelatorKey) -> list[tuple[CorrelatorKey, Fraction]]:
    """<tau_0 prod tau_ki>_g = sum_i <... tau_{ki - 1} ...>_g, duplicates merged."""
    key = _as_key(key)
    if 0 not in key.exps:
        raise CorrelatorError(f"{key} has no tau_0 insertion")
    rest = list(key.exps)
    rest.remove(0)
    if not is_stable_gn(key.g, len(rest)):
        raise CorrelatorError(f"removing tau_0 from {key} leaves an unstable space")
    terms: Counter[CorrelatorKey] = Counter()
    for i, k in enumerate(rest):
        if k == 0:
            continue
        lowered = rest[:i] + [k - 1] + rest[i + 1 :]
        terms[CorrelatorKey(key.g, tuple(lowered))] += 1
    return [(k, Fraction(c)) for k, c in sorted(terms.items())]


def dilaton_reduce(key: CorrelatorKey) -> tuple[CorrelatorKey, Fraction]:
    """<tau_1 prod tau_ki>_g = (2g - 2 + n) <prod tau_ki>_g, n = number of remaining points."""
    key = _as_key(key)
    if 1 not in key.exps:
        raise CorrelatorError(f"{key} has no tau_1 insertion")
    rest = list(key.exps)
    rest.remove(1)
    if not is_stable_gn(key.g, len(rest)):
        raise CorrelatorError(f"removing tau_1 from {key} leaves an unstable space")
    return CorrelatorKey(key.g, tuple(rest)), Fraction(2 * key.g - 2 + len(rest))


def _corr(g: int, exps: Sequence[int], table: IntersectionTable, active: set) -> Fraction:
    """Correlator with unstable or negative-exponent arguments read as 0."""
    if any(k < 0 for k in exps) or not is_stable_gn(g, len(exps)):
        return Fraction(0)
    return _witten(CorrelatorKey(g, tuple(exps)), table, active)


def _witten(key: CorrelatorKey, table: IntersectionTable, active: set) -> Fraction:
    if not key.is_dimensional():
        return Fraction(0)
    cached = table.get(key)
    if cached is not None:
        return cached
    if key in active:
        raise CorrelatorError(f"internal: recursion revisited {key}")
    active.add(key)
    try:
        if key.g == 0:
            value = psi_genus0(key.exps)
        elif 0 in key.exps and is_stable_gn(key.g, key.n - 1):
            value = sum(
                (c * _witten(k, table, active) for k, c in string_reduce(key)), Fraction(0)
            )
        elif 1 in key.exps and is_stable_gn(key.g, key.n - 1):
            k, c = dilaton_reduce(key)
            value = c * _witten(k, table, active)
        else:
            value = _kdv_solve(key, table, active)
    finally:
        active.discard(key)
    table.put(key, value)
    return value


def _kdv_solve(key: CorrelatorKey, table: IntersectionTable, active: set) -> Fraction:
    """Solve the KdV equation

        (2m+1) <<t_m t_0 t_0>> = <<t_{m-1} t_0>> <<t_0^3>>
                                 + 2 <<t_{m-1} t_0^2>> <<t_0^2>>
                                 + 1/4 <<t_{m-1} t_0^4>>

    at m = K + 2, where K is the largest exponent of ``key``, for the
    coefficient <tau_K X>_g. By the string equation that coefficient enters
    with weight 2K+5 on the left and 1 on the right; every other term has
    lower genus, fewer points, or the same (g, n) with a larger top exponent.
    """
    g = key.g
    exps = list(key.exps)
    big = exps.pop()  # K, the largest exponent
    rest = exps  # X
    m = big + 2

    def c(gg, ks):
        return _corr(gg, ks, table, active)

    # left side minus its T-term: <t_{K+2} t_0 t_0 X> = T + sum_x <t_{K+1} X - e_x>
    #                                                 + sum_x <t_{K+2} t_0 X - e_x>
    lhs_other = Fraction(0)
    for i in range(len(rest)):
        lowered = rest[:i] + [rest[i] - 1] + rest[i + 1 :]
        lhs_other += c(g, [big + 1] + lowered)
        lhs_other += c(g, [big + 2, 0] + lowered)

    rhs_other = Fraction(0)
    idx = range(len(rest))
    for size in range(len(rest) + 1):
        for chosen in combinations(idx, size):
            a = [rest[i] for i in chosen]
            b = [rest[i] for i in idx if i not in chosen]
            for g1 in range(g + 1):
                g2 = g - g1
                first = [m - 1, 0] + a
                if g1 == g and not b:
                    # <t_{K+1} t_0 X>_g <t_0^3>_0 with the T-term removed
                    part = Fraction(0)
                    for i in range(len(rest)):
                        lowered = rest[:i] + [rest[i] - 1] + rest[i + 1 :]
                        part += c(g, [big + 1] + lowered)
                    rhs_other += part * c(0, [0, 0, 0])
                else:
                    right = c(g2, [0, 0, 0] + b)
                    if right:
                        rhs_other += c(g1, first) * right
                right = c(g2, [0, 0] + b)
                if right:
                    rhs_other += 2 * c(g1, [m - 1, 0, 0] + a) * right
    if g >= 1:
        rhs_other += Fraction(1, 4) * c(g - 1, [m - 1, 0, 0, 0, 0] + rest)
    weight = 2 * m + 1
    return (rhs_other - weight * lhs_other) / (weight - 1)


def witten_correlator(
    key_or_g: CorrelatorKey | int,
    exps: Iterable[int] | None = None,
    table: IntersectionTable | None = None,
) -> Fraction:
    """<tau_k1 ... tau_kn>_g, memoized into ``table`` (a shared default if omitted).

    Order of attempts: dimension gate, genus-0 multinomial, string, dilaton,
    KdV.
    """
    key = _as_key(key_or_g, exps)
    if table is None:
        table = _DEFAULT_TABLE
    limit = sys.getrecursionlimit()
    if limit < 20000:
        sys.setrecursionlimit(20000)
    try:
        return _witten(key, table, set())
    finally:
        sys.setrecursionlimit(limit)


def fill_table(g: int, n: int, table: IntersectionTable | None = None) -> IntersectionTable:
    """Compute every dimensional correlator on M_{g,n}-bar."""
    if table is None:
        table = _DEFAULT_TABLE
    dim = 3 * g - 3 + n
    for ks in _multisets(n, dim):
        witten_correlator(g, ks, table)
    return table


def _multisets(n: int, total: int, lo: int = 0) -> Iterator[tuple[int, ...]]:
    """Weakly increasing n-tuples of non-negative integers with the given sum."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(lo, total // n + 1):
        for rest in _multisets(n - 1, total - first, first):
            yield (first,) + rest


def kdv_residual(
    g: int, m: int, x: Sequence[int], table: IntersectionTable | None = None
) -> Fraction:
    """Left minus right side of the KdV equation at the coefficient of
    hbar^(2g-2) t^X / Aut(X); zero when the table is consistent."""
    if m < 1:
        raise ValueError("the KdV equation needs m >= 1")
    if table is None:
        table = _DEFAULT_TABLE
    active: set = set()

    def c(gg, ks):
        return _corr(gg, ks, table, active)

    x = list(x)
    lhs = (2 * m + 1) * c(g, [m, 0, 0] + x)
    rhs = Fraction(0)
    idx = range(len(x))
    for size in range(len(x) + 1):
        for chosen in combinations(idx, size):
            a = [x[i] for i in chosen]
            b = [x[i] for i in idx if i not in chosen]
            for g1 in range(g + 1):
                g2 = g - g1
                rhs += c(g1, [m - 1, 0] + a) * c(g2, [0, 0, 0] + b)
                rhs += 2 * c(g1, [m - 1, 0, 0] + a) * c(g2, [0, 0] + b)
    if g >= 1:
        rhs += Fraction(1, 4) * c(g - 1, [m - 1, 0, 0, 0, 0] + x)
    return lhs - rhs


# --------------------------------------------------------------------------
# Virasoro L_{-1} and L_0 at the level of coefficients
#
# F_g = sum over multisets M of <M>_g t^M / Aut(M). The operators are
#   L_{-1} = -d/dt_0 + t_0^2 / 2 (genus 0 only) + sum_i t_{i+1} d/dt_i
#   L_0    = -3/2 d/dt_1 + sum_i (2i+1)/2 t_i d/dt_i + 1/16 (genus 1 only)
# and the coefficient of t^M in L(F_g) is set to zero. Solving for the term
# carrying the derivative in t_0 (resp. t_1) gives a relation that must match
# the string (resp. dilaton) equation term by term.


def _coef_factor(m: Counter) -> Fraction:
    """1/Aut of a multiset given as a Counter."""
    return Fraction(1, prod(factorial(v) for v in m.values()))


def _virasoro_relation(
    g: int, exps: Sequence[int], which: str
) -> tuple[dict[CorrelatorKey, Fraction], Fraction]:
    mset = Counter(exps)
    terms: Counter = Counter()
    const = Fraction(0)
    if which == "L-1":
        lead_exp = 0
        lead_weight = Fraction(-1)
        # t_{i+1} d/dt_i: for each i+1 present in M, coefficient of t^{M - e_{i+1} + e_i}
        for j in sorted(mset):
            if j == 0:
                continue
            shifted = mset.copy()
            shifted[j] -= 1
            shifted[j - 1] += 1
            shifted = +shifted
            mult = shifted[j - 1]
            terms[tuple(sorted(shifted.elements()))] += mult * _coef_factor(shifted)
        if g == 0 and mset == Counter({0: 2}):
            const = Fraction(1, 2)
    elif which == "L0":
        lead_exp = 1
        lead_weight = Fraction(-3, 2)
        weight = sum(Fraction(2 * i + 1, 2) * v for i, v in mset.items())
        terms[tuple(sorted(mset.elements()))] += weight * _coef_factor(mset)
        if g == 1 and not mset:
            const = Fraction(1, 16)
    else:
        raise ValueError(which)
    lead = mset.copy()
    lead[lead_exp] += 1
    # lead_weight * (mult of lead_exp in lead) * <lead>/Aut(lead) + sum terms + const = 0
    scale = lead_weight * lead[lead_exp] * _coef_factor(lead)
    relation: dict[CorrelatorKey, Fraction] = {}
    for ks, coeff in terms.items():
        if not is_stable_gn(g, len(ks)):
            continue
        key = CorrelatorKey(g, ks)
        relation[key] = relation.get(key, Fraction(0)) - coeff / scale
    return {k: v for k, v in relation.items() if v != 0}, -const / scale


def l_minus1_relation(g: int, exps: Sequence[int]):
    """(terms, constant) with <tau_0 prod tau_exps>_g = sum terms + constant."""
    return _virasoro_relation(g, exps, "L-1")


def l0_relation(g: int, exps: Sequence[int]):
    """(terms, constant) with <tau_1 prod tau_exps>_g = sum terms + constant.

    Valid on dimensional keys; the multiple equals the dilaton factor there.
    """
    return _virasoro_relation(g, exps, "L0")


# --------------------------------------------------------------------------
# Hodge integrals from Hurwitz numbers


@dataclass(frozen=True, order=True)
class HodgeIntegral:
    """value = integral over M_{g,n}-bar of psi_1^a_1 ... psi_n^a_n lambda_k."""

    g: int
    a: tuple[int, ...]
    k: int
    value: Fraction

    def __post_init__(self):
        n = len(self.a)
        if sum(self.a) + self.k != 3 * self.g - 3 + n:
            raise ValueError(f"dimension mismatch for a={self.a}, k={self.k}, g={self.g}")
        if not 0 <= self.k <= self.g:
            raise ValueError(f"lambda index {self.k} outside [0, {self.g}]")


def elsv_prefactor(g: int, alpha: Sequence[int]) -> Fraction:
    r = rh_branch_count(g, sum(alpha), len(alpha))
    return factorial(r) * prod(Fraction(a**a, factorial(a)) for a in alpha)


def hurwitz_polynomial_value(
    g: int,
    alpha: Sequence[int],
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_branch: int = DEFAULT_MAX_BRANCH,
) -> Fraction:
    """P_{g,n}(alpha) = H^g_alpha / (r! prod alpha_i^alpha_i / alpha_i!)."""
    h = _hurwitz_cached(g, Partition.of(alpha), max_degree, max_branch)
    return h / elsv_prefactor(g, alpha)


@lru_cache(maxsize=None)
def _hurwitz_cached(g, alpha, max_degree, max_branch) -> Fraction:
    return hurwitz_bruteforce(g, alpha, max_degree=max_degree, max_branch=max_branch)


def _sample_points(n: int) -> Iterator[tuple[int, ...]]:
    """Points of Z_{>=1}^n in order of increasing sum (a simplex grid, layer by layer)."""
    level = 0
    while True:
        layer = [tuple(s + 1 for s in p) for p in product(range(level + 1), repeat=n) if sum(p) == level]
        yield from sorted(layer)
        level += 1


def hodge_window(g: int, n: int) -> tuple[int, int]:
    """Range of total psi-degree |a| carried by P_{g,n}."""
    return max(2 * g - 3 + n, 0), 3 * g - 3 + n


def _fit(g, n, basis, known, extra_checks, max_degree, max_branch) -> dict[Exponents, Fraction]:
    """Solve for the coefficients of ``basis`` in P_{g,n} - known, then verify
    on ``extra_checks`` further points."""
    samples: list[SymmetricPolySample] = []
    points = _sample_points(n)
    solution = None

    def residual_value(pt):
        p = hurwitz_polynomial_value(g, pt, max_degree=max_degree, max_branch=max_branch)
        return p - sum((c * eval_monomial(e, pt) for e, c in known.items()), Fraction(0))

    while solution is None:
        pt = next(points)
        samples.append(SymmetricPolySample(pt, residual_value(pt)))
        if len(samples) < len(basis):
            continue
        try:
            solution = solve_monomial_coefficients(samples, basis)
        except InsufficientSamplesError:
            solution = None
    for _ in range(extra_checks):
        pt = next(points)
        samples.append(SymmetricPolySample(pt, residual_value(pt)))
    # re-solve with every sample: raises if any check point disagrees
    return solve_monomial_coefficients(samples, basis)


@lru_cache(maxsize=None)
def _hodge_coefficients(
    g: int, n: int, full_window: bool, extra_checks: int, max_degree: int, max_branch: int
) -> dict[Exponents, Fraction]:
    lo, hi = hodge_window(g, n)
    basis = monomials(n, lo, hi)
    reducible = n >= 2 and is_stable_gn(g, n - 1)
    if full_window or not reducible:
        return _fit(g, n, basis, {}, extra_checks, max_degree, max_branch)
    lower = _hodge_coefficients(g, n - 1, False, extra_checks, max_degree, max_branch)
    known: dict[Exponents, Fraction] = {}
    unknown = []
    for e in basis:
        val = _reduce_hodge_coefficient(g, e, lower)
        if val is None:
            unknown.append(e)
        elif val != 0:
            known[e] = val
    found = _fit(g, n, unknown, known, extra_checks, max_degree, max_branch)
    known.update(found)
    return known


def _reduce_hodge_coefficient(g, e, lower) -> Fraction | None:
    """Coefficient of alpha^e in P_{g,n} from P_{g,n-1} when some e_i is 0 or 1.

    lambda classes pull back under forgetting a point, so the string and
    dilaton equations hold with lambda_k inserted; the sign (-1)^k is the same
    on both sides because k is unchanged.
    """
    n = len(e)
    for i, ei in enumerate(e):
        if ei == 0:
            rest = e[:i] + e[i + 1 :]
            total = Fraction(0)
            for j, ej in enumerate(rest):
                if ej > 0:
                    lowered = rest[:j] + (ej - 1,) + rest[j + 1 :]
                    total += lower.get(lowered, Fraction(0))
            return total
        if ei == 1:
            rest = e[:i] + e[i + 1 :]
            return (2 * g - 2 + n - 1) * lower.get(rest, Fraction(0))
    return None


def hodge_from_hurwitz(
    g: int,
    n: int,
    *,
    full_window: bool = False,
    extra_checks: int = 2,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_branch: int = DEFAULT_MAX_BRANCH,
) -> list[HodgeIntegral]:
    """Every integral of psi^a lambda_k on M_{g,n}-bar, read off P_{g,n}.

    P_{g,n} is sampled through brute-force Hurwitz numbers and interpolated
    on the degree window [2g-3+n, 3g-3+n]; the coefficient of alpha^a is
    (-1)^k times the integral with k = 3g-3+n-|a|.

    With ``full_window=False`` coefficients having some a_i in {0, 1} are
    taken from P_{g,n-1} by the string and dilaton equations and only the
    rest are fitted; ``extra_checks`` additional sample points must agree
    exactly in either mode. Zero integrals are included.
    """
    if not is_stable_gn(g, n):
        raise ValueError(f"(g, n) = ({g}, {n}) is not stable")
    coeffs = _hodge_coefficients(g, n, full_window, extra_checks, max_degree, max_branch)
    lo, hi = hodge_window(g, n)
    out = []
    for e in monomials(n, lo, hi):
        k = hi - sum(e)
        out.append(HodgeIntegral(g, e, k, (-1) ** k * coeffs.get(e, Fraction(0))))
    return sorted(out, key=lambda h: (h.k, h.a))


def hodge_lookup(hodge: Iterable[HodgeIntegral]) -> dict[tuple[tuple[int, ...], int], Fraction]:
    return {(h.a, h.k): h.value for h in hodge}


def elsv_forward(g: int, alpha: Sequence[int], hodge: Iterable[HodgeIntegral] = ()) -> Fraction:
    """r! prod(alpha_i^alpha_i / alpha_i!) * sum (-1)^k <psi^a lambda_k> prod alpha_i^a_i.

    For genus 0 with one or two points the unstable conventions
    1/alpha^2 and 1/(alpha_1 + alpha_2) stand in for the integral.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    pre = elsv_prefactor(g, alpha)
    if g == 0 and n == 1:
        return pre / alpha[0] ** 2
    if g == 0 and n == 2:
        return pre / (alpha[0] + alpha[1])
    table = hodge_lookup(hodge)
    lo, hi = hodge_window(g, n)
    total = Fraction(0)
    for e in monomials(n, lo, hi):
        k = hi - sum(e)
        try:
            value = table[(e, k)]
        except KeyError:
            raise MissingHodgeError(f"missing Hodge integral a={e}, k={k} for g={g}") from None
        total += (-1) ** k * value * eval_monomial(e, alpha)
    return pre * total


def top_psi_from_hodge(hodge: Iterable[HodgeIntegral]) -> dict[CorrelatorKey, Fraction]:
    """The k = 0 entries, i.e. pure psi intersections, keyed by correlator."""
    out = {}
    for h in hodge:
        if h.k == 0:
            out[CorrelatorKey(h.g, h.a)] = h.value
    return out


__all__ = [
    "CorrelatorError",
    "CorrelatorKey",
    "HodgeIntegral",
    "IntersectionTable",
    "MissingHodgeError",
    "default_table",
    "dilaton_reduce",
    "elsv_forward",
    "fill_table",
    "hodge_from_hurwitz",
    "kdv_residual",
    "l0_relation",
    "l_minus1_relation",
    "psi_genus0",
    "string_reduce",
    "top_psi_from_hodge",
    "witten_correlator",
]
