import random
from fractions import Fraction

import pytest

from tautkit.errors import UnsupportedDecorationError
from tautkit.graphs import DualGraph, dimension, enumerate_stable, graph_genus, is_stable, relabel_legs
from tautkit.invariance import (
    GraphSum,
    boundary_divisor_05,
    component_signature,
    cross_ratio_relation_m05,
    graph_degree,
    point_degrees,
    point_normal_form,
    rl_apply,
    rl_graph,
    sum_genus,
    swap_legs,
)

B = DualGraph.build


def divisor_04():
    return B((0, 0), [(0, 1)], [0, 0, 1, 1])


def test_hand_expansion_on_m04_divisor():
    # cutting the edge in both directions; neither vertex can be split
    A12_B34 = lambda five, six: B((0, 0), [], [0, 0, 1, 1, five, six])  # noqa: E731
    expected = GraphSum(
        [
            (A12_B34((0, 1), (1, 0)), 1),
            (A12_B34((0, 0), (1, 1)), 1),
            (A12_B34((1, 1), (0, 0)), 1),
            (A12_B34((1, 0), (0, 1)), 1),
        ]
    )
    out = rl_graph(divisor_04(), 1)
    assert out == expected
    assert len(out) == 4
    assert all(c == 1 for _, c in out)


def test_smooth_genus1_point():
    # M_{1,1}: genus reduction only, one term <5, 6> on a genus-0 vertex
    out = rl_graph(B((1,), [], [0]), 1)
    assert out == GraphSum.single(B((0,), [], [0, 0, 0]), -1)


def _fixtures():
    graphs = [divisor_04(), B((1,), [], [0]), B((1,), [], [(0, 1), 0])]
    graphs += [c.canonical for c in enumerate_stable(1, 2)]
    graphs += [c.canonical for c in enumerate_stable(0, 5, dim=1)][:4]
    graphs += [c.canonical for c in enumerate_stable(2, 1)]
    graphs.append(B((1, 0), [(0, 1, 1, 0)], [1, 1, 1]))
    return graphs


def _swap_new_legs(S):
    out = GraphSum()
    for G, c in S:
        out = out + GraphSum.single(swap_legs(G, G.n - 1, G.n), c)
    return out


@pytest.mark.parametrize("l", [1, 2, 3])
def test_parity(l):
    for G in _fixtures():
        out = rl_graph(G, l)
        assert _swap_new_legs(out) == out.scale((-1) ** (l - 1)), G


@pytest.mark.parametrize("l", [1, 2, 3])
def test_degree_and_stability(l):
    for G in _fixtures():
        for H, _ in rl_graph(G, l):
            assert is_stable(H)
            assert H.n == G.n + 2
            assert graph_genus(H) == graph_genus(G) - 1
            assert dimension(H) == dimension(G) - l


def test_linearity():
    rng = random.Random(11)
    pool = _fixtures()
    by_type = {}
    for G in pool:
        by_type.setdefault((graph_genus(G), G.n), []).append(G)
    for (g, n), graphs in by_type.items():
        S = GraphSum([(G, Fraction(rng.randint(-5, 5), rng.randint(1, 4))) for G in graphs])
        T = GraphSum([(rng.choice(graphs), Fraction(rng.randint(1, 5)))])
        a, b = Fraction(2, 3), Fraction(-5, 7)
        for l in (1, 2):
            lhs = rl_apply(S.scale(a) + T.scale(b), l)
            rhs = rl_apply(S, l).scale(a) + rl_apply(T, l).scale(b)
            assert lhs == rhs


def test_decorated_vertices_rejected():
    G = B((1,), [], [0], classes=("k1",))
    with pytest.raises(UnsupportedDecorationError):
        rl_graph(G, 1)
    with pytest.raises(ValueError):
        rl_graph(divisor_04(), 0)


def test_graph_sum_algebra():
    G = divisor_04()
    S = GraphSum.single(G, 2)
    assert (S - S) == GraphSum() and not (S - S)
    assert S.coefficient(G) == 2
    assert (-S).coefficient(G) == -2
    assert GraphSum.from_json(S.to_json()) == S
    assert sum_genus(S) == {0}


def test_cross_ratio_fixture():
    rel = cross_ratio_relation_m05()
    assert len(rel) == 4
    assert sorted(c for _, c in rel) == [-1, -1, 1, 1]
    for G, _ in rel:
        assert graph_genus(G) == 0 and G.n == 5 and dimension(G) == 1
    assert rel.coefficient(boundary_divisor_05((3, 4))) == 1
    assert rel.coefficient(boundary_divisor_05((2, 4))) == -1


def test_cross_ratio_relabeling():
    # swapping legs 1 and 2 yields D(12|34) - D(23|14) pulled back: another relation
    rel = cross_ratio_relation_m05()
    swapped = rel.map_graphs(lambda G: relabel_legs(G, {1: 2, 2: 1}))
    assert len(swapped) == 4
    assert point_normal_form(rl_apply(swapped, 1)) == GraphSum()


def test_cross_ratio_annihilated_in_degree():
    out = rl_apply(cross_ratio_relation_m05(), 1)
    assert out  # cancellation happens in degree, not term by term
    for G, _ in out:
        assert dimension(G) == 0 and graph_genus(G) == -1 and G.n == 7
    assert point_degrees(out) == {}
    assert point_normal_form(out) == GraphSum()


def test_single_divisor_not_annihilated():
    out = rl_apply(GraphSum.single(boundary_divisor_05((1, 2))), 1)
    assert point_degrees(out)


def test_degrees():
    # psi on M_{0,4}-bar is a point
    assert graph_degree(B((0,), [], [(0, 1), 0, 0, 0])) == 1
    assert graph_degree(B((1,), [], [(0, 1)])) == Fraction(1, 24)
    assert graph_degree(B((0,), [(0, 0)], [0])) == Fraction(1, 2)
    with pytest.raises(ValueError):
        graph_degree(B((0,), [], [0, 0, 0, 0]))
    G = B((0, 0), [], [0, 0, 0, 1, 1, 1])
    assert component_signature(G) == ((0, (1, 2, 3)), (0, (4, 5, 6)))
