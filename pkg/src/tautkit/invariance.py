"""Y.-P. Lee's operator r_l on formal sums of psi-decorated dual graphs.

r_l sends a graph of genus g with n legs to a signed sum of graphs of
genus g-1 with legs 1..n+2, built from three moves: cutting an edge,
lowering the genus of a vertex, and splitting a vertex in two. Unstable
outputs are dropped. Dimension-0 sums can be reduced to their degrees on
the connected components of the moduli space of possibly-disconnected
curves, which is how relations are tested for vanishing.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import UnsupportedDecorationError
from .graphs import (
    DualGraph,
    _half_edges,
    automorphism_count,
    canonical,
    dimension,
    graph_genus,
    is_stable,
)
from .intersections import witten_correlator


class GraphSum:
    """Rational linear combination of dual graphs up to isomorphism."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[DualGraph, Fraction] | Iterable[tuple[DualGraph, Fraction]] = ()):
        self.terms: dict[DualGraph, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for G, c in items:
            self._add(G, Fraction(c))

    def _add(self, G: DualGraph, c: Fraction) -> None:
        if c == 0:
            return
        key = canonical(G)
        new = self.terms.get(key, Fraction(0)) + c
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    @classmethod
    def single(cls, G: DualGraph, c: Fraction | int = 1) -> "GraphSum":
        return cls([(G, Fraction(c))])

    def __iter__(self) -> Iterator[tuple[DualGraph, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, GraphSum) and self.terms == other.terms

    def __add__(self, other: "GraphSum") -> "GraphSum":
        out = GraphSum(self.terms)
        for G, c in other.terms.items():
            out._add(G, c)
        return out

    def __neg__(self) -> "GraphSum":
        return self.scale(-1)

    def __sub__(self, other: "GraphSum") -> "GraphSum":
        return self + (-other)

    def scale(self, a: Fraction | int) -> "GraphSum":
        return GraphSum({G: a * c for G, c in self.terms.items()})

    __rmul__ = scale

    def coefficient(self, G: DualGraph) -> Fraction:
        return self.terms.get(canonical(G), Fraction(0))

    def map_graphs(self, f) -> "GraphSum":
        return GraphSum([(f(G), c) for G, c in self.terms.items()])

    def to_json(self) -> str:
        return json.dumps(
            [
                {"graph": G.to_json(), "coeff": f"{c.numerator}/{c.denominator}"}
                for G, c in self
            ],
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "GraphSum":
        return cls([(DualGraph.from_json(t["graph"]), Fraction(t["coeff"])) for t in json.loads(text)])

    def __repr__(self) -> str:
        return f"GraphSum({len(self.terms)} terms)"


def swap_legs(G: DualGraph, i: int, j: int) -> DualGraph:
    legs = list(G.legs)
    legs[i - 1], legs[j - 1] = legs[j - 1], legs[i - 1]
    return DualGraph(G.genera, G.edges, tuple(legs), G.classes)


# --------------------------------------------------------------------------
# the operator


def _with_psi(legs: list[list[int]], label: int, extra: int) -> None:
    legs[label - 1][1] += extra


def _graph(genera, edges, legs) -> DualGraph:
    return DualGraph(tuple(genera), tuple(tuple(e) for e in edges), tuple(tuple(x) for x in legs))


def _edge_cutting(G: DualGraph, l: int) -> Iterator[tuple[DualGraph, int]]:
    n = G.n
    sign_end = (-1) ** (l - 1)
    for idx, (a, b, pa, pb) in enumerate(G.edges):
        directions = [(a, pa, b, pb)]
        # a loop with equal end decorations has one direction; otherwise
        # reversing the edge gives a different decorated result
        if a != b or pa != pb:
            directions.append((b, pb, a, pa))
        rest = [e for k, e in enumerate(G.edges) if k != idx]
        for start, ps, end, pe in directions:
            base_legs = [list(x) for x in G.legs] + [[start, ps], [end, pe]]
            first = [list(x) for x in base_legs]
            _with_psi(first, n + 1, l)
            yield _graph(G.genera, rest, first), 1
            second = [list(x) for x in base_legs]
            _with_psi(second, n + 2, l)
            yield _graph(G.genera, rest, second), sign_end


def _genus_reduction(G: DualGraph, l: int) -> Iterator[tuple[DualGraph, int]]:
    for v, gv in enumerate(G.genera):
        if gv == 0:
            continue
        genera = list(G.genera)
        genera[v] -= 1
        for m in range(l):
            legs = [list(x) for x in G.legs] + [[v, m], [v, l - 1 - m]]
            yield _graph(genera, G.edges, legs), (-1) ** (m + 1)


def _vertex_splitting(G: DualGraph, l: int) -> Iterator[tuple[DualGraph, int]]:
    for v, gv in enumerate(G.genera):
        hes = _half_edges(G, v)
        w = G.num_vertices
        for g1 in range(gv + 1):
            for mask in range(1 << len(hes)):
                edges = [list(e) for e in G.edges]
                legs = [list(x) for x in G.legs]
                for i, h in enumerate(hes):
                    if mask >> i & 1:
                        if h[0] == "leg":
                            legs[h[1]][0] = w
                        else:
                            edges[h[1]][h[2]] = w
                genera = list(G.genera) + [gv - g1]
                genera[v] = g1
                for m in range(l):
                    out_legs = [list(x) for x in legs] + [[v, m], [w, l - 1 - m]]
                    yield _graph(genera, edges, out_legs), (-1) ** (m + 1)


def rl_graph(G: DualGraph, l: int) -> GraphSum:
    """r_l of a single graph."""
    if l < 1:
        raise ValueError("l must be a positive integer")
    if G.classes:
        raise UnsupportedDecorationError(
            f"vertex classes {G.classes} are not supported by r_l; only psi decorations are"
        )
    out = GraphSum()
    for move in (_edge_cutting, _genus_reduction, _vertex_splitting):
        for H, sign in move(G, l):
            if is_stable(H):
                out._add(H, Fraction(sign))
    return out


def rl_apply(S: GraphSum, l: int) -> GraphSum:
    """Linear extension of ``rl_graph`` to a GraphSum."""
    out = GraphSum()
    for G, c in S.terms.items():
        out = out + rl_graph(G, l).scale(c)
    return out


# --------------------------------------------------------------------------
# fixtures and dimension-0 reduction


def boundary_divisor_05(side: Iterable[int]) -> DualGraph:
    """The divisor of M_{0,5}-bar with ``side`` (2 labels) split off from the other 3."""
    side = set(side)
    legs = [0 if i in side else 1 for i in range(1, 6)]
    return DualGraph.build((0, 0), [(0, 1)], legs)


def cross_ratio_relation_m05() -> GraphSum:
    """Pullback to M_{0,5}-bar of D(12|34) - D(13|24) on M_{0,4}-bar.

    Under forgetting point 5 each divisor D(ab|cd) pulls back to
    D(ab5|cd) + D(ab|cd5).
    """
    terms = []
    for split, sign in (((1, 2), 1), ((1, 3), -1)):
        other = tuple(x for x in (1, 2, 3, 4) if x not in split)
        terms.append((boundary_divisor_05(other), sign))  # 5 with ``split``
        terms.append((boundary_divisor_05(split), sign))  # 5 with ``other``
    return GraphSum([(G, Fraction(c)) for G, c in terms])


def component_signature(G: DualGraph) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Sorted (genus, leg labels) of each connected component."""
    sig = []
    for comp in G.components():
        vs = set(comp)
        sub_genus = sum(G.genera[v] for v in comp) + sum(
            1 for a, _, _, _ in G.edges if a in vs
        ) - len(comp) + 1
        labels = tuple(i for i, (v, _) in enumerate(G.legs, start=1) if v in vs)
        sig.append((sub_genus, labels))
    return tuple(sorted(sig))


def graph_degree(G: DualGraph) -> Fraction:
    """Degree of a dimension-0 psi-decorated graph class: product of vertex
    correlators divided by the automorphism count."""
    if dimension(G) != 0:
        raise ValueError("degree is defined for dimension-0 classes only")
    total = Fraction(1)
    for v, gv in enumerate(G.genera):
        cls = G.vertex_class(v)
        psis = G.half_edge_psis(v)
        if cls == "pt":
            total *= 1 if not any(psis) else 0
            continue
        if cls:
            raise UnsupportedDecorationError(f"cannot integrate vertex class {cls!r}")
        total *= witten_correlator(gv, psis)
    return total / automorphism_count(G)


def point_degrees(S: GraphSum) -> dict[tuple, Fraction]:
    """Degree of a dimension-0 GraphSum on each connected component of the
    moduli space of possibly-disconnected curves."""
    out: dict[tuple, Fraction] = {}
    for G, c in S:
        sig = component_signature(G)
        out[sig] = out.get(sig, Fraction(0)) + c * graph_degree(G)
    return {k: v for k, v in sorted(out.items()) if v != 0}


def point_representative(signature) -> DualGraph:
    """One smooth vertex per component, decorated with the point class."""
    genera = [gc for gc, _ in signature]
    n = sum(len(labels) for _, labels in signature)
    legs: list = [None] * n
    for v, (_, labels) in enumerate(signature):
        for label in labels:
            legs[label - 1] = (v, 0)
    return DualGraph(tuple(genera), (), tuple(legs), tuple("pt" for _ in genera))


def point_normal_form(S: GraphSum) -> GraphSum:
    """Replace a dimension-0 sum by degree times a point class per component."""
    return GraphSum(
        [(point_representative(sig), deg) for sig, deg in point_degrees(S).items()]
    )


def sum_genus(S: GraphSum) -> set[int]:
    return {graph_genus(G) for G, _ in S}
