from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bernoulli_by_recurrence
from tautkit.errors import DegreeBoundsError, InsufficientSamplesError
from tautkit.exact import (
    Partition,
    SymmetricPolySample,
    aut_partition,
    bernoulli,
    box_grid,
    double_factorial,
    euler_char_mg,
    euler_char_mgn,
    eval_poly,
    interpolate_poly,
    is_symmetric,
    partitions,
    rh_branch_count,
    simplex_grid,
)
from tautkit.hurwitz import hurwitz_bruteforce

rationals = st.fractions(max_denominator=10**6)


def test_partition_validation():
    p = Partition((3, 1, 1))
    assert (p.size, p.length) == (5, 3)
    assert Partition.of([1, 3, 1]) == p
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partitions_count():
    assert [len(list(partitions(d))) for d in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_double_factorial_examples():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(5) == 15
    assert double_factorial(7) == 105 == factorial(8) // (2**4 * factorial(4))
    with pytest.raises(ValueError):
        double_factorial(-2)


@pytest.mark.parametrize("k", range(21))
def test_double_factorial_identity(k):
    assert double_factorial(2 * k - 1) * 2**k * factorial(k) == factorial(2 * k)


def test_bernoulli_values():
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)
    with pytest.raises(ValueError):
        bernoulli(3)
    with pytest.raises(ValueError):
        bernoulli(0)


@pytest.mark.parametrize("m", range(2, 41, 2))
def test_bernoulli_matches_recurrence(m):
    assert bernoulli(m) == bernoulli_by_recurrence(m)


def test_aut_partition():
    assert aut_partition((2, 2, 2, 5, 5)) == factorial(3) * factorial(2) == 12
    assert aut_partition((7,)) == 1
    assert aut_partition((1, 1, 1, 1)) == 24


def test_rh_branch_count():
    assert rh_branch_count(0, 2, 1) == 1
    assert rh_branch_count(1, 2, 1) == 3
    assert rh_branch_count(0, 4, 4) == 6
    # Riemann-Hurwitz: 2 - 2g = 2d - (d - n) - r
    for g in range(4):
        for d in range(1, 6):
            for n in range(1, d + 1):
                r = rh_branch_count(g, d, n)
                assert 2 - 2 * g == 2 * d - (d - n) - r


def test_euler_characteristics():
    assert euler_char_mg(2) == Fraction(-1, 240)
    assert euler_char_mg(3) == Fraction(1, 1008)
    assert euler_char_mgn(1, 1) == Fraction(-1, 12)
    assert euler_char_mgn(1, 2) == Fraction(1, 12)
    assert euler_char_mgn(2, 0) == Fraction(-1, 240)
    for g in range(2, 7):
        assert euler_char_mgn(g, 0) == euler_char_mg(g)
    with pytest.raises(ValueError):
        euler_char_mgn(1, 0)
    with pytest.raises(ValueError):
        euler_char_mg(1)


@pytest.mark.parametrize("g", range(1, 5))
def test_euler_char_point_recursion(g):
    for n in range(0, 6):
        if 2 * g - 2 + n <= 0:
            continue
        assert euler_char_mgn(g, n + 1) == -(2 * g - 2 + n) * euler_char_mgn(g, n)


@given(rationals, rationals, rationals)
def test_fraction_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


def test_interpolate_identity():
    samples = [SymmetricPolySample((x,), Fraction(x)) for x in (1, 2, 3)]
    assert interpolate_poly(samples, 1, 0, 1) == {(1,): 1}


def test_interpolate_two_variables():
    samples = [SymmetricPolySample(p, Fraction(p[0] * p[1] + 2)) for p in box_grid(2, 3)]
    assert interpolate_poly(samples, 2, 0, 2) == {(1, 1): 1, (0, 0): 2}


def test_interpolate_from_hurwitz_genus_one():
    samples = []
    for a in (1, 2, 3):
        h = hurwitz_bruteforce(1, (a,))
        r = rh_branch_count(1, a, 1)
        samples.append(SymmetricPolySample((a,), h / (factorial(r) * Fraction(a**a, factorial(a)))))
    assert interpolate_poly(samples, 1, 0, 1) == {(1,): Fraction(1, 24), (0,): Fraction(-1, 24)}


def test_interpolate_errors():
    samples = [SymmetricPolySample((1,), Fraction(1))]
    with pytest.raises(InsufficientSamplesError):
        interpolate_poly(samples, 1, 0, 1)
    samples = [SymmetricPolySample((x,), Fraction(x**2)) for x in (1, 2, 3)]
    with pytest.raises(DegreeBoundsError):
        interpolate_poly(samples, 1, 0, 1)
    with pytest.raises(ValueError):
        interpolate_poly([SymmetricPolySample((0,), Fraction(0))], 1, 0, 1)


def test_box_grid_can_be_singular():
    # {1,2}^2 has 4 points but cannot separate x^2 - 3x + 2 from 0
    pts = box_grid(2, 2)
    samples = [SymmetricPolySample(p, Fraction(0)) for p in pts]
    with pytest.raises(InsufficientSamplesError):
        interpolate_poly(samples, 2, 0, 2)
    # the simplex grid of level 2 has 6 points and is unisolvent
    samples = [SymmetricPolySample(p, Fraction(0)) for p in simplex_grid(2, 2)]
    assert interpolate_poly(samples, 2, 0, 2) == {}


poly_terms = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)).filter(lambda e: sum(e) <= 3),
    st.fractions(max_denominator=50).filter(lambda x: x != 0),
    max_size=6,
)


@settings(max_examples=40, deadline=None)
@given(poly_terms)
def test_interpolation_round_trip(coeffs):
    pts = simplex_grid(3, 3)
    samples = [SymmetricPolySample(p, eval_poly(coeffs, p)) for p in pts]
    found = interpolate_poly(samples, 3, 0, 3)
    assert found == coeffs
    for s in samples:
        assert eval_poly(found, s.point) == s.value


def test_is_symmetric():
    assert is_symmetric({(1, 0): 1, (0, 1): 1})
    assert not is_symmetric({(1, 0): 1})
