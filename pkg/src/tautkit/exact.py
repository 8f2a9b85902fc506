"""Exact arithmetic helpers shared by every other module.

All rational quantities are :class:`fractions.Fraction`; integers are plain
Python ints, so nothing here ever rounds.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import comb, factorial, prod
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DegreeBoundsError, InsufficientSamplesError

BigRational = Fraction

Exponents = tuple[int, ...]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    ``Partition((2, 1, 1))`` validates the order; ``Partition.of([1, 2, 1])``
    sorts first.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def partitions(d: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``d``, largest parts first."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield Partition(())
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            yield Partition((first,) + tuple(rest))


def double_factorial(k: int) -> int:
    """k!! = k (k-2) (k-4) ... down to 1 or 2, with 0!! = (-1)!! = 1."""
    if k < -1:
        raise ValueError(f"double factorial undefined for {k}")
    return prod(range(k, 0, -2))


@lru_cache(maxsize=None)
def _bernoulli_table(m: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa; yields B_1 = +1/2, even-index values are convention free.
    a = [Fraction(0)] * (m + 1)
    out = []
    for j in range(m + 1):
        a[j] = Fraction(1, j + 1)
        for i in range(j, 0, -1):
            a[i - 1] = i * (a[i - 1] - a[i])
        out.append(a[0])
    return tuple(out)


def bernoulli(m: int) -> Fraction:
    """Even-index Bernoulli number B_m (B_2 = 1/6, B_4 = -1/30)."""
    if m < 2 or m % 2:
        raise ValueError(f"bernoulli expects an even index >= 2, got {m}")
    return _bernoulli_table(m)[m]


def aut_partition(alpha: Sequence[int]) -> int:
    """Order of the stabiliser of the tuple ``alpha`` in S_n."""
    return prod(factorial(c) for c in Counter(alpha).values())


def rh_branch_count(g: int, d: int, n: int) -> int:
    """Number r = 2g + d + n - 2 of simple branch points of a cover with n poles."""
    return 2 * g + d + n - 2


def euler_char_mg(g: int) -> Fraction:
    """Orbifold Euler characteristic of M_g, g >= 2 (Harer-Zagier)."""
    if g < 2:
        raise ValueError("euler_char_mg needs g >= 2")
    return bernoulli(2 * g) / (2 * g * (2 * g - 2))


def euler_char_mgn(g: int, n: int) -> Fraction:
    """Orbifold Euler characteristic of M_{g,n} for g >= 1 in the stable range."""
    if g < 1 or 2 * g - 2 + n <= 0 or n < 0:
        raise ValueError(f"euler_char_mgn needs g >= 1 and 2g-2+n > 0, got ({g}, {n})")
    sign = -1 if n % 2 else 1
    return sign * Fraction(factorial(2 * g + n - 3)) * bernoulli(2 * g) / (
        2 * g * factorial(2 * g - 2)
    )


# --------------------------------------------------------------------------
# polynomial interpolation over Q


class SymmetricPolySample(NamedTuple):
    point: tuple[int, ...]
    value: Fraction


def monomials(n: int, degmin: int, degmax: int) -> list[Exponents]:
    """Exponent vectors in ``n`` variables with total degree in [degmin, degmax]."""
    out = []
    for deg in range(max(degmin, 0), degmax + 1):
        for combo in combinations_with_replacement(range(n), deg):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return sorted(set(out), key=lambda e: (sum(e), tuple(-x for x in e)))


def eval_monomial(exps: Exponents, point: Sequence[int]) -> int:
    return prod(x**e for x, e in zip(point, exps))


def eval_poly(coeffs: dict[Exponents, Fraction], point: Sequence[int]) -> Fraction:
    return sum((c * eval_monomial(e, point) for e, c in coeffs.items()), Fraction(0))


def simplex_grid(n: int, level: int) -> list[tuple[int, ...]]:
    """Points of Z_{>=1}^n with sum(x_i - 1) <= level.

    This triangular lattice is unisolvent for polynomials of total degree
    <= level, which a box grid of the same size is not.
    """
    pts = []
    for shifted in product(range(level + 1), repeat=n):
        if sum(shifted) <= level:
            pts.append(tuple(s + 1 for s in shifted))
    return sorted(pts, key=lambda p: (sum(p), p))


def box_grid(n: int, m: int) -> list[tuple[int, ...]]:
    return list(product(range(1, m + 1), repeat=n))


def rref_solve(rows: list[list[Fraction]], rhs: list[Fraction], ncols: int):
    """Row-reduce [rows | rhs]; return (solution or None, rank, consistent)."""
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    consistent = all(row[-1] == 0 for row in a[r:])
    if r < ncols:
        return None, r, consistent
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = a[i][-1]
    return sol, r, consistent


def matrix_rank(rows: list[list[Fraction]], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    _, rank, _ = rref_solve(rows, [Fraction(0)] * len(rows), ncols)
    return rank


def solve_monomial_coefficients(
    samples: Sequence[SymmetricPolySample], basis: Sequence[Exponents]
) -> dict[Exponents, Fraction]:
    """Exact coefficients on ``basis`` reproducing every sample.

    Raises :class:`InsufficientSamplesError` when the samples do not pin the
    coefficients down and :class:`DegreeBoundsError` when no combination of
    ``basis`` fits them.
    """
    basis = list(basis)
    rows = [[Fraction(eval_monomial(e, s.point)) for e in basis] for s in samples]
    rhs = [Fraction(s.value) for s in samples]
    if not basis:
        if any(v != 0 for v in rhs):
            raise DegreeBoundsError("samples are nonzero but the monomial basis is empty")
        return {}
    sol, rank, consistent = rref_solve(rows, rhs, len(basis))
    if not consistent:
        raise DegreeBoundsError(
            "samples are inconsistent with a polynomial supported on the given monomials"
        )
    if sol is None:
        raise InsufficientSamplesError(
            f"rank {rank} < {len(basis)} unknowns; add sample points"
        )
    coeffs = {e: c for e, c in zip(basis, sol) if c != 0}
    for s in samples:
        if eval_poly(coeffs, s.point) != s.value:  # pragma: no cover - guarded above
            raise DegreeBoundsError(f"nonzero residual at {s.point}")
    return coeffs


def interpolate_poly(
    samples: Sequence[SymmetricPolySample], n: int, degmin: int, degmax: int
) -> dict[Exponents, Fraction]:
    """Recover a polynomial in ``n`` variables whose monomials have total
    degree in ``[degmin, degmax]`` from exact samples (plain monomial basis).

    Only nonzero coefficients are returned.
    """
    for s in samples:
        if len(s.point) != n or any(x < 1 for x in s.point):
            raise ValueError(f"bad sample point {s.point} for n={n}")
    return solve_monomial_coefficients(samples, monomials(n, degmin, degmax))


def is_symmetric(coeffs: dict[Exponents, Fraction]) -> bool:
    return all(coeffs.get(tuple(p), 0) == c for e, c in coeffs.items() for p in permutations(e))


def multinomial(parts: Sequence[int]) -> int:
    out, total = 1, 0
    for p in parts:
        total += p
        out *= comb(total, p)
    return out
