"""Faber's intersection number identities for kappa monomials of weight g-2.

For d = (d_1, ..., d_n) with every d_j >= 1 and sum d_j = g - 2,

    sum over sigma in S_n of kappa_sigma
        = (2g-3+n)! (2g-1)!! / ((2g-1)! prod (2d_j+1)!!) * kappa_{g-2},

where kappa_sigma has one factor kappa_{s} per cycle of sigma, s being the
sum of the d_j over that cycle. Collecting one identity per d gives a linear
system for every weight-(g-2) monomial as a multiple of kappa_{g-2}.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial, prod
from typing import Sequence

from .errors import ResourceCapError, TautkitError
from .exact import double_factorial, matrix_rank, partitions, rref_solve

DEFAULT_MAX_POINTS = 8


class InconsistentSystemError(TautkitError):
    pass


@dataclass(frozen=True, order=True)
class KappaMonomial:
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(self.indices, reverse=True))
        if any(i < 1 for i in idx):
            raise ValueError(f"kappa indices must be positive: {idx}")
        object.__setattr__(self, "indices", idx)

    @property
    def weight(self) -> int:
        return sum(self.indices)

    def __str__(self) -> str:
        if not self.indices:
            return "1"
        parts = []
        for i, m in sorted(Counter(self.indices).items(), reverse=True):
            parts.append(f"k{i}" + (f"^{m}" if m > 1 else ""))
        return "*".join(parts)


@dataclass(frozen=True)
class FaberIdentity:
    g: int
    d: tuple[int, ...]
    lhs_coeff: Fraction
    rhs: dict[KappaMonomial, int] = field(hash=False)


def _cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc, i = [], s
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        out.append(cyc)
    return out


def faber_rhs(d: Sequence[int], *, max_points: int = DEFAULT_MAX_POINTS) -> dict[KappaMonomial, int]:
    """Multiplicity of each kappa monomial in sum over S_n of kappa_sigma."""
    d = tuple(d)
    n = len(d)
    if n < 1 or any(x < 1 for x in d):
        raise ValueError(f"need n >= 1 exponents, all >= 1: {d}")
    if n > max_points:
        raise ResourceCapError(f"{n} points exceed the cap max_points={max_points}", "max_points")
    out: Counter[KappaMonomial] = Counter()
    for perm in permutations(range(n)):
        out[KappaMonomial(tuple(sum(d[i] for i in c) for c in _cycles(perm)))] += 1
    return dict(sorted(out.items()))


def faber_lhs_coeff(g: int, d: Sequence[int]) -> Fraction:
    """(2g-3+n)! (2g-1)!! / ((2g-1)! prod (2d_j+1)!!)."""
    d = tuple(d)
    if g < 2:
        raise ValueError("need g >= 2")
    if sum(d) != g - 2:
        raise ValueError(f"exponents {d} do not have weight g-2 = {g - 2}")
    n = len(d)
    return Fraction(
        factorial(2 * g - 3 + n) * double_factorial(2 * g - 1),
        factorial(2 * g - 1) * prod(double_factorial(2 * x + 1) for x in d),
    )


def faber_taketwo_coeff(g: int, alpha: Sequence[int]) -> Fraction:
    """The same coefficient written for exponents alpha_j = d_j + 1 > 1."""
    alpha = tuple(alpha)
    if any(a <= 1 for a in alpha):
        raise ValueError(f"all alpha_j must exceed 1: {alpha}")
    if sum(alpha) != g - 2 + len(alpha):
        raise ValueError(f"need sum alpha = g - 2 + n, got {alpha} for g = {g}")
    return faber_lhs_coeff(g, tuple(a - 1 for a in alpha))


def faber_identity(g: int, d: Sequence[int]) -> FaberIdentity:
    d = tuple(sorted(d, reverse=True))
    return FaberIdentity(g, d, faber_lhs_coeff(g, d), faber_rhs(d))


def faber_identities(g: int) -> list[FaberIdentity]:
    """One identity per partition of g-2 (each part a d_j >= 1)."""
    if g < 3:
        return []
    return [faber_identity(g, p) for p in partitions(g - 2)]


@dataclass
class KappaSolution:
    g: int
    values: dict[KappaMonomial, Fraction]
    unresolved: list[KappaMonomial]

    @property
    def determined(self) -> bool:
        return not self.unresolved


def kappa_solve(g: int) -> KappaSolution:
    """Every weight-(g-2) kappa monomial as a multiple of kappa_{g-2}.

    Unknowns are the monomials (partitions of g-2); the identity for d reads
    sum_m mult(m) x_m = lhs_coeff(d) with x_{kappa_{g-2}} = 1 on the right.
    """
    if g < 2:
        raise ValueError("need g >= 2")
    if g == 2:
        return KappaSolution(2, {KappaMonomial(()): Fraction(1)}, [])
    unknowns = [KappaMonomial(tuple(p)) for p in partitions(g - 2)]
    col = {m: i for i, m in enumerate(unknowns)}
    rows, rhs = [], []
    # normalization kappa_{g-2} = 1
    norm = [Fraction(0)] * len(unknowns)
    norm[col[KappaMonomial((g - 2,))]] = Fraction(1)
    rows.append(norm)
    rhs.append(Fraction(1))
    identities = faber_identities(g)
    for ident in identities:
        row = [Fraction(0)] * len(unknowns)
        for m, c in ident.rhs.items():
            row[col[m]] += c
        rows.append(row)
        rhs.append(ident.lhs_coeff)
    sol, rank, consistent = rref_solve(rows, rhs, len(unknowns))
    if not consistent:
        raise InconsistentSystemError(f"identities for g={g} are inconsistent")
    if sol is None:
        return KappaSolution(g, {}, _unresolved(rows, unknowns))
    values = dict(zip(unknowns, sol))
    for ident in identities:
        if sum(c * values[m] for m, c in ident.rhs.items()) != ident.lhs_coeff:
            raise InconsistentSystemError(f"nonzero residual for d={ident.d}")
    return KappaSolution(g, values, [])


def _unresolved(rows, unknowns) -> list[KappaMonomial]:
    """Monomials whose value is not fixed: x_i is determined iff e_i lies in
    the row space."""
    base = matrix_rank(rows, len(unknowns))
    out = []
    for i, m in enumerate(unknowns):
        probe = [Fraction(int(j == i)) for j in range(len(unknowns))]
        if matrix_rank(rows + [probe], len(unknowns)) > base:
            out.append(m)
    return out


def kappa_one_power(g: int) -> Fraction:
    """Closed form for kappa_1^{g-2} / kappa_{g-2}: 2^(2g-5) ((g-2)!)^2 / (g-1)."""
    if g < 3:
        raise ValueError("need g >= 3")
    return Fraction(2 ** (2 * g - 5) * factorial(g - 2) ** 2, g - 1)
