import random
from fractions import Fraction
from math import factorial

import pytest

from tautkit.errors import ResourceCapError
from tautkit.exact import partitions
from tautkit.faber import (
    KappaMonomial,
    faber_identities,
    faber_identity,
    faber_lhs_coeff,
    faber_rhs,
    faber_taketwo_coeff,
    kappa_one_power,
    kappa_solve,
)


def km(*idx):
    return KappaMonomial(idx)


def test_monomial_normalization():
    assert km(1, 2) == km(2, 1)
    assert km(2, 1).weight == 3
    assert str(km(1, 1, 2)) == "k2*k1^2"
    with pytest.raises(ValueError):
        km(0, 1)


def test_rhs_examples():
    assert faber_rhs((1,)) == {km(1): 1}
    assert faber_rhs((1, 1)) == {km(1, 1): 1, km(2): 1}
    assert faber_rhs((1, 2)) == {km(2, 1): 1, km(3): 1}
    assert faber_rhs((1, 1, 1)) == {km(1, 1, 1): 1, km(2, 1): 3, km(3): 2}


def test_rhs_errors():
    with pytest.raises(ValueError):
        faber_rhs((0, 1))
    with pytest.raises(ValueError):
        faber_rhs(())
    with pytest.raises(ResourceCapError):
        faber_rhs((1,) * 9)


@pytest.mark.parametrize("n", range(1, 7))
def test_rhs_multiplicities_sum_to_n_factorial(n):
    rng = random.Random(n)
    d = tuple(rng.randint(1, 3) for _ in range(n))
    rhs = faber_rhs(d)
    assert sum(rhs.values()) == factorial(n)
    assert all(m.weight == sum(d) for m in rhs)
    shuffled = list(d)
    rng.shuffle(shuffled)
    assert faber_rhs(shuffled) == rhs


def test_lhs_examples():
    assert faber_lhs_coeff(4, (1, 1)) == Fraction(35, 3)
    assert faber_lhs_coeff(3, (1,)) == 1
    with pytest.raises(ValueError):
        faber_lhs_coeff(4, (1,))
    with pytest.raises(ValueError):
        faber_lhs_coeff(1, ())


@pytest.mark.parametrize("g", range(3, 9))
def test_single_point_coefficient_is_one(g):
    assert faber_lhs_coeff(g, (g - 2,)) == 1


def test_two_point_coefficient():
    # g = 5, d = (2, 1): 9! 9!! / (9! 5!! 3!!) = 945 / 45
    assert faber_lhs_coeff(5, (2, 1)) == 21


def test_taketwo_matches_shift():
    for g in range(3, 8):
        for p in partitions(g - 2):
            alpha = tuple(x + 1 for x in p)
            assert faber_taketwo_coeff(g, alpha) == faber_lhs_coeff(g, p)
    with pytest.raises(ValueError):
        faber_taketwo_coeff(5, (1, 4))


def test_identities_cover_partitions():
    assert faber_identities(2) == []
    assert [i.d for i in faber_identities(5)] == [(3,), (2, 1), (1, 1, 1)]
    ident = faber_identity(4, (1, 1))
    assert ident.lhs_coeff == Fraction(35, 3)
    assert ident.rhs == {km(1, 1): 1, km(2): 1}


def test_genus_two_is_trivial():
    sol = kappa_solve(2)
    assert sol.determined and sol.values == {km(): 1}


def test_genus_four_and_five():
    sol = kappa_solve(4)
    assert sol.values[km(1, 1)] == Fraction(32, 3)
    sol = kappa_solve(5)
    assert sol.values[km(1, 1, 1)] == 288
    assert sol.values[km(3)] == 1


@pytest.mark.parametrize("g", range(3, 9))
def test_kappa_system_determined_and_consistent(g):
    sol = kappa_solve(g)
    assert sol.determined
    assert sol.values[km(g - 2)] == 1
    assert sol.values[KappaMonomial((1,) * (g - 2))] == kappa_one_power(g)
    for ident in faber_identities(g):
        assert sum(c * sol.values[m] for m, c in ident.rhs.items()) == ident.lhs_coeff
