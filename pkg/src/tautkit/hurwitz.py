"""Hurwitz numbers by enumeration of transposition tuples, by the genus-0
closed form, and the join-cut recursion for Faber-Hurwitz classes.

A degree-d cover of P^1 with profile ``alpha`` over infinity and r simple
branch points is encoded by transpositions s_1, ..., s_r in S_d whose
product has cycle type ``alpha``; the cover is connected when the
s_i generate a transitive subgroup. The Hurwitz number is the tuple count
times Aut(alpha) / d!.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import ResourceCapError
from .exact import Partition, aut_partition, rh_branch_count

DEFAULT_MAX_DEGREE = 7
DEFAULT_MAX_BRANCH = 32

Perm = tuple[int, ...]
Blocks = tuple[int, ...]


@dataclass(frozen=True)
class HurwitzQuery:
    g: int
    alpha: Partition
    connected: bool = True

    def __post_init__(self):
        object.__setattr__(self, "alpha", Partition.of(self.alpha))

    @property
    def degree(self) -> int:
        return self.alpha.size

    @property
    def branch_count(self) -> int:
        return rh_branch_count(self.g, self.alpha.size, self.alpha.length)


@dataclass(frozen=True)
class FaberHurwitzCoeff:
    g: int
    alpha: Partition
    coeff: Fraction


# --------------------------------------------------------------------------
# permutation helpers


def cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            n += 1
        lengths.append(n)
    return Partition.of(lengths)


def count_cycles(perm: Sequence[int]) -> int:
    return cycle_type(perm).length


def transpositions(d: int) -> list[tuple[int, int]]:
    return list(combinations(range(d), 2))


def compose_transposition(perm: Perm, a: int, b: int) -> Perm:
    """Right-multiply ``perm`` by the transposition (a b), i.e. perm . (a b)."""
    p = list(perm)
    p[a], p[b] = perm[b], perm[a]
    return tuple(p)


def merge_blocks(blocks: Blocks, a: int, b: int) -> Blocks:
    """Union of the blocks of a and b; blocks[i] is the least element of i's block."""
    ra, rb = blocks[a], blocks[b]
    if ra == rb:
        return blocks
    lo, hi = min(ra, rb), max(ra, rb)
    return tuple(lo if x == hi else x for x in blocks)


def blocks_of_perm(blocks: Blocks, perm: Sequence[int]) -> Blocks:
    """Merge ``blocks`` along every cycle of ``perm``."""
    for i, j in enumerate(perm):
        blocks = merge_blocks(blocks, i, j)
    return blocks


def is_transitive(d: int, generators: Sequence[Sequence[int]]) -> bool:
    blocks = tuple(range(d))
    for gen in generators:
        blocks = blocks_of_perm(blocks, gen)
    return len(set(blocks)) <= 1


def permutations_of_type(alpha: Partition) -> Iterator[Perm]:
    """All permutations of {0..d-1} with cycle type ``alpha``."""
    d = alpha.size

    def build(remaining: tuple[int, ...], parts: tuple[int, ...], perm: list[int]):
        if not parts:
            yield tuple(perm)
            return
        first = remaining[0]
        rest = remaining[1:]
        # the cycle through the smallest free point may have any of the sizes
        for k in sorted(set(parts), reverse=True):
            i = parts.index(k)
            later = parts[:i] + parts[i + 1 :]
            for others in combinations(rest, k - 1):
                for order in permutations(others):
                    cyc = (first,) + order
                    for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                        perm[x] = y
                    left = tuple(x for x in rest if x not in others)
                    yield from build(left, later, perm)

    yield from build(tuple(range(d)), tuple(alpha), [0] * d)


# --------------------------------------------------------------------------
# brute-force counting


def _check_caps(d: int, r: int, max_degree: int, max_branch: int) -> None:
    if d > max_degree:
        raise ResourceCapError(
            f"degree {d} exceeds the enumeration cap max_degree={max_degree}", "max_degree"
        )
    if r > max_branch:
        raise ResourceCapError(
            f"{r} branch points exceed the enumeration cap max_branch={max_branch}",
            "max_branch",
        )


@lru_cache(maxsize=64)
def _tuple_counter(d: int, target: Partition, connected: bool):
    """Memoized extension counter for fixed (d, target type, connectivity).

    ``count(perm, blocks, rem)`` is the number of ways to append ``rem``
    transpositions so the final product has type ``target`` and (when
    ``connected``) the sheets form one orbit.
    """
    n_target = target.length
    moves = transpositions(d)

    @lru_cache(maxsize=None)
    def count(perm: Perm, blocks: Blocks, rem: int) -> int:
        cycles = count_cycles(perm)
        gap = cycles - n_target
        if abs(gap) > rem or (rem - gap) % 2:
            return 0
        if connected and len(set(blocks)) - 1 > rem:
            return 0
        if rem == 0:
            if cycle_type(perm) != target:
                return 0
            return 1 if (not connected or len(set(blocks)) == 1) else 0
        total = 0
        for a, b in moves:
            nb = merge_blocks(blocks, a, b) if connected else blocks
            total += count(compose_transposition(perm, a, b), nb, rem - 1)
        return total

    return count


def _count_from(d, target, connected, perm, blocks, rem) -> int:
    return _tuple_counter(d, target, connected)(perm, blocks, rem)


def count_transposition_tuples(
    d: int,
    target: Partition,
    r: int,
    connected: bool = True,
    start: Perm | None = None,
    workers: int = 1,
) -> int:
    """Number of r-tuples of transpositions t_i with start . t_1 ... t_r of type
    ``target``; ``connected`` requires the start permutation and the t_i to act
    transitively.

    With ``workers > 1`` the search is split by the first transposition and
    the partial counts summed.
    """
    identity = tuple(range(d))
    if start is None:
        start = identity
    blocks = blocks_of_perm(identity, start) if connected else identity
    if r == 0 or workers <= 1:
        return _count_from(d, target, connected, start, blocks, r)
    jobs = []
    for a, b in transpositions(d):
        nb = merge_blocks(blocks, a, b) if connected else blocks
        jobs.append((d, target, connected, compose_transposition(start, a, b), nb, r - 1))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        partials = list(pool.map(_count_from, *zip(*jobs)))
    return sum(partials)


def hurwitz_bruteforce(
    g: int,
    alpha: Sequence[int],
    connected: bool = True,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_branch: int = DEFAULT_MAX_BRANCH,
    workers: int = 1,
) -> Fraction:
    """H^g_alpha as (#transposition tuples) * Aut(alpha) / d!.

    Disconnected counts accept any g with r >= 0 (components may push the
    arithmetic genus below zero).
    """
    alpha = Partition.of(alpha)
    d, n = alpha.size, alpha.length
    if d < 1:
        raise ValueError("profile must be a nonempty partition")
    r = rh_branch_count(g, d, n)
    if r < 0:
        return Fraction(0)
    _check_caps(d, r, max_degree, max_branch)
    raw = count_transposition_tuples(d, alpha, r, connected, workers=workers)
    return Fraction(raw * aut_partition(alpha), factorial(d))


def iter_transposition_tuples(
    d: int, target: Partition, r: int, connected: bool = True
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield the accepted tuples themselves (small cases only)."""
    counter = _tuple_counter(d, Partition.of(target), connected)
    moves = transpositions(d)

    def walk(perm, blocks, rem, prefix):
        if counter(perm, blocks, rem) == 0:
            return
        if rem == 0:
            yield prefix
            return
        for a, b in moves:
            nb = merge_blocks(blocks, a, b) if connected else blocks
            yield from walk(compose_transposition(perm, a, b), nb, rem - 1, prefix + ((a, b),))

    identity = tuple(range(d))
    yield from walk(identity, identity, r, ())


def hurwitz_genus0(alpha: Sequence[int]) -> Fraction:
    """Closed form r! d^(n-3) prod alpha_i^alpha_i / alpha_i! for genus 0."""
    alpha = Partition.of(alpha)
    if not alpha:
        raise ValueError("profile must be a nonempty partition")
    d, n = alpha.size, alpha.length
    r = rh_branch_count(0, d, n)
    return (
        factorial(r)
        * Fraction(d) ** (n - 3)
        * prod(Fraction(a**a, factorial(a)) for a in alpha)
    )


def double_hurwitz_bruteforce(
    g: int,
    alpha: Sequence[int],
    beta: Sequence[int],
    connected: bool = True,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_branch: int = DEFAULT_MAX_BRANCH,
) -> Fraction:
    """Covers with profile ``alpha`` over 0, ``beta`` over infinity and r simple
    branch points: #{(rho, t_1..t_r) : rho in C(alpha), rho t_1 ... t_r in C(beta)}
    times Aut(alpha) Aut(beta) / d!.
    """
    alpha, beta = Partition.of(alpha), Partition.of(beta)
    d = alpha.size
    if beta.size != d or d < 1:
        raise ValueError("profiles must be nonempty partitions of the same degree")
    r = 2 * g - 2 + alpha.length + beta.length
    if r < 0:
        return Fraction(0)
    _check_caps(d, r, max_degree, max_branch)
    raw = sum(
        count_transposition_tuples(d, beta, r, connected, start=rho)
        for rho in permutations_of_type(alpha)
    )
    return Fraction(raw * aut_partition(alpha) * aut_partition(beta), factorial(d))


# --------------------------------------------------------------------------
# join-cut recursion


@lru_cache(maxsize=None)
def _faber_hurwitz(g: int, alpha: Partition) -> Fraction:
    d, l = alpha.size, alpha.length
    total = Fraction(0)
    # cut: part alpha_k splits as i + j; i joins a genus-0 cover with the
    # parts in S, j stays on the genus-g side with the remaining parts
    for k, part in enumerate(alpha):
        others = alpha[:k] + alpha[k + 1 :]
        for i in range(1, part):
            j = part - i
            for size in range(len(others) + 1):
                for chosen in combinations(range(len(others)), size):
                    left = Partition.of([i] + [others[c] for c in chosen])
                    right = Partition.of(
                        [j] + [others[c] for c in range(len(others)) if c not in chosen]
                    )
                    a = left.size + left.length - 2
                    b = right.size + right.length - 1
                    assert a + b == d + l - 2
                    total += (
                        i * j * hurwitz_genus0(left) * _faber_hurwitz(g, right) * comb(a + b, a)
                    )
    # join: two parts merge
    for x, y in combinations(range(l), 2):
        merged = [p for t, p in enumerate(alpha) if t not in (x, y)] + [alpha[x] + alpha[y]]
        total += _faber_hurwitz(g, Partition.of(merged))
    # the genus-g curve sits over the right-hand line
    total += sum(Fraction(a) ** (2 * g + 1) for a in alpha) * hurwitz_genus0(alpha)
    return total


def faber_hurwitz_coeff(g: int, alpha: Sequence[int]) -> Fraction:
    """Rational c with F^g_alpha = c * Z_{g,1} from the join-cut recursion."""
    if g < 2:
        raise ValueError("the join-cut recursion is set up for g >= 2")
    alpha = Partition.of(alpha)
    if not alpha:
        raise ValueError("profile must be a nonempty partition")
    if alpha == Partition((1,)):
        return Fraction(1)
    return _faber_hurwitz(g, alpha)
