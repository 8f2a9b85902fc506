"""Stable dual graphs: validation, canonical forms, enumeration, export.

A graph has genus-labelled vertices, edges (loops allowed), legs labelled
1..n, and a psi exponent on every half-edge. Vertices may also carry an
opaque class name (a kappa monomial, a point class, ...); such classes are
compared by name only.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import ResourceCapError

DEFAULT_MAX_DIM = 8

Edge = tuple[int, int, int, int]  # (u, v, psi at u's end, psi at v's end)
Leg = tuple[int, int]  # (vertex, psi)


def _normalize_edge(e: Sequence[int]) -> Edge:
    if len(e) == 2:
        u, v, pu, pv = e[0], e[1], 0, 0
    else:
        u, v, pu, pv = e
    if (u, pu) > (v, pv):
        u, v, pu, pv = v, u, pv, pu
    return (u, v, pu, pv)


@dataclass(frozen=True, order=True)
class DualGraph:
    """``legs[i]`` is the (vertex, psi) of the leg labelled i + 1."""

    genera: tuple[int, ...]
    edges: tuple[Edge, ...] = ()
    legs: tuple[Leg, ...] = ()
    classes: tuple[str, ...] = ()

    def __post_init__(self):
        genera = tuple(int(x) for x in self.genera)
        edges = tuple(sorted(_normalize_edge(e) for e in self.edges))
        legs = tuple((int(v), int(p)) for v, p in self.legs)
        classes = tuple(self.classes)
        if classes and not any(classes):
            classes = ()
        V = len(genera)
        if any(x < 0 for x in genera):
            raise ValueError(f"vertex genera must be non-negative: {genera}")
        for u, v, pu, pv in edges:
            if not (0 <= u < V and 0 <= v < V) or pu < 0 or pv < 0:
                raise ValueError(f"bad edge {(u, v, pu, pv)}")
        for v, p in legs:
            if not 0 <= v < V or p < 0:
                raise ValueError(f"bad leg {(v, p)}")
        if classes and len(classes) != V:
            raise ValueError("one class name per vertex expected")
        object.__setattr__(self, "genera", genera)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "classes", classes)

    @classmethod
    def build(
        cls,
        genera: Sequence[int],
        edges: Iterable[Sequence[int]] = (),
        legs: Iterable[int | Sequence[int]] = (),
        classes: Sequence[str] = (),
    ) -> "DualGraph":
        """Legs may be given as bare vertex indices (psi 0) or (vertex, psi)."""
        leg_list = [(x, 0) if isinstance(x, int) else tuple(x) for x in legs]
        return cls(tuple(genera), tuple(tuple(e) for e in edges), tuple(leg_list), tuple(classes))

    # basic invariants -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.legs)

    @property
    def num_vertices(self) -> int:
        return len(self.genera)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertex_class(self, v: int) -> str:
        return self.classes[v] if self.classes else ""

    def valence(self, v: int) -> int:
        val = sum(1 for w, _ in self.legs if w == v)
        for a, b, _, _ in self.edges:
            val += (a == v) + (b == v)
        return val

    def half_edge_psis(self, v: int) -> list[int]:
        out = [p for w, p in self.legs if w == v]
        for a, b, pa, pb in self.edges:
            if a == v:
                out.append(pa)
            if b == v:
                out.append(pb)
        return out

    def components(self) -> list[list[int]]:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _, _ in self.edges:
            parent[find(a)] = find(b)
        groups: dict[int, list[int]] = {}
        for v in range(self.num_vertices):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def psi_degree(self) -> int:
        return sum(p for _, p in self.legs) + sum(pa + pb for _, _, pa, pb in self.edges)

    def to_json(self) -> dict:
        out = {
            "genera": list(self.genera),
            "edges": [list(e) for e in self.edges],
            "legs": [list(leg) for leg in self.legs],
        }
        if self.classes:
            out["classes"] = list(self.classes)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "DualGraph":
        return cls(
            tuple(data["genera"]),
            tuple(tuple(e) for e in data.get("edges", [])),
            tuple(tuple(x) for x in data.get("legs", [])),
            tuple(data.get("classes", ())),
        )


def graph_genus(G: DualGraph) -> int:
    """Arithmetic genus sum g_v + E - V + 1; a disjoint union of curves of
    genus g and h has genus g + h - 1, which this formula respects."""
    return sum(G.genera) + G.num_edges - G.num_vertices + 1


def is_stable(G: DualGraph) -> bool:
    for v, g in enumerate(G.genera):
        val = G.valence(v)
        if g == 0 and val < 3:
            return False
        if g == 1 and val < 1:
            return False
    return G.num_vertices > 0


def codim(G: DualGraph) -> int:
    return G.num_edges


def stratum_dimension(G: DualGraph) -> int:
    """Dimension of the stratum of G (psi decorations ignored)."""
    return 3 * graph_genus(G) - 3 + G.n - G.num_edges


def dimension(G: DualGraph) -> int:
    """Dimension of the decorated class: stratum dimension minus psi degree.

    Vertex classes are opaque and contribute nothing here.
    """
    return stratum_dimension(G) - G.psi_degree()


# --------------------------------------------------------------------------
# canonical form


def _refine_colors(G: DualGraph) -> list[int]:
    V = G.num_vertices
    legs_at: list[list[tuple[int, int]]] = [[] for _ in range(V)]
    for label, (v, p) in enumerate(G.legs, start=1):
        legs_at[v].append((label, p))
    loops: list[list[tuple[int, int]]] = [[] for _ in range(V)]
    nbrs: list[list[tuple[int, int, int]]] = [[] for _ in range(V)]
    for a, b, pa, pb in G.edges:
        if a == b:
            loops[a].append((pa, pb))
        else:
            nbrs[a].append((b, pa, pb))
            nbrs[b].append((a, pb, pa))
    raw = [
        (G.genera[v], G.vertex_class(v), tuple(sorted(legs_at[v])), tuple(sorted(loops[v])))
        for v in range(V)
    ]
    colors = _rank(raw)
    while True:
        raw = [
            (colors[v], tuple(sorted((colors[w], p, q) for w, p, q in nbrs[v])))
            for v in range(V)
        ]
        new = _rank(raw)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _rank(values: list) -> list[int]:
    order = {x: i for i, x in enumerate(sorted(set(values)))}
    return [order[x] for x in values]


def _encode(G: DualGraph, old_to_new: Sequence[int]):
    V = G.num_vertices
    genera = [0] * V
    classes = [""] * V
    for old in range(V):
        genera[old_to_new[old]] = G.genera[old]
        classes[old_to_new[old]] = G.vertex_class(old)
    edges = tuple(
        sorted(_normalize_edge((old_to_new[a], old_to_new[b], pa, pb)) for a, b, pa, pb in G.edges)
    )
    legs = tuple((old_to_new[v], p) for v, p in G.legs)
    return (tuple(genera), edges, legs, tuple(classes) if G.classes else ())


@dataclass(frozen=True, order=True)
class GraphClass:
    canonical: DualGraph
    aut: int

    def to_json(self) -> dict:
        return {
            "graph": self.canonical.to_json(),
            "genus": graph_genus(self.canonical),
            "codim": codim(self.canonical),
            "dim": stratum_dimension(self.canonical),
            "aut": self.aut,
        }


@lru_cache(maxsize=100_000)
def canonical_class(G: DualGraph) -> GraphClass:
    """Minimal encoding over all vertex orders compatible with a colour
    refinement, with the automorphism count (legs fixed pointwise)."""
    colors = _refine_colors(G)
    classes = sorted(set(colors))
    members = [[v for v in range(G.num_vertices) if colors[v] == c] for c in classes]
    best = None
    hits = 0
    for choice in product(*(permutations(m) for m in members)):
        order = [v for block in choice for v in block]
        old_to_new = [0] * G.num_vertices
        for new, old in enumerate(order):
            old_to_new[old] = new
        enc = _encode(G, old_to_new)
        if best is None or enc < best:
            best, hits = enc, 1
        elif enc == best:
            hits += 1
    genera, edges, legs, cls = best
    H = DualGraph(genera, edges, legs, cls)
    aut = hits
    seen: dict[Edge, int] = {}
    for e in H.edges:
        seen[e] = seen.get(e, 0) + 1
    for e, m in seen.items():
        aut *= factorial(m)
        if e[0] == e[1] and e[2] == e[3]:
            aut *= 2**m
    return GraphClass(H, aut)


def canonical(G: DualGraph) -> DualGraph:
    return canonical_class(G).canonical


def automorphism_count(G: DualGraph) -> int:
    return canonical_class(G).aut


def is_isomorphic(G1: DualGraph, G2: DualGraph) -> bool:
    if (G1.num_vertices, G1.num_edges, G1.n) != (G2.num_vertices, G2.num_edges, G2.n):
        return False
    return canonical(G1) == canonical(G2)


def relabel_vertices(G: DualGraph, old_to_new: Sequence[int]) -> DualGraph:
    genera, edges, legs, classes = _encode(G, old_to_new)
    return DualGraph(genera, edges, legs, classes)


def relabel_legs(G: DualGraph, mapping: dict[int, int]) -> DualGraph:
    """Rename leg labels by ``mapping`` (old label -> new label, a bijection of 1..n)."""
    legs = [None] * G.n
    for label, leg in enumerate(G.legs, start=1):
        legs[mapping.get(label, label) - 1] = leg
    return DualGraph(G.genera, G.edges, tuple(legs), G.classes)


def disjoint_union(graphs: Sequence[DualGraph], labels: Sequence[Sequence[int]], n: int) -> DualGraph:
    """Union of ``graphs`` where the legs 1..n_i of graph i become ``labels[i]``."""
    genera: list[int] = []
    edges: list[Edge] = []
    legs: list[Leg | None] = [None] * n
    classes: list[str] = []
    for G, lab in zip(graphs, labels):
        off = len(genera)
        genera.extend(G.genera)
        classes.extend(G.vertex_class(v) for v in range(G.num_vertices))
        edges.extend((a + off, b + off, pa, pb) for a, b, pa, pb in G.edges)
        for (v, p), new_label in zip(G.legs, lab):
            legs[new_label - 1] = (v + off, p)
    if any(leg is None for leg in legs):
        raise ValueError("labels do not cover 1..n")
    return DualGraph(tuple(genera), tuple(edges), tuple(legs), tuple(classes))


# --------------------------------------------------------------------------
# enumeration


def _half_edges(G: DualGraph, v: int) -> list[tuple]:
    out = [("leg", i) for i, (w, _) in enumerate(G.legs) if w == v]
    for idx, (a, b, _, _) in enumerate(G.edges):
        if a == v:
            out.append(("edge", idx, 0))
        if b == v:
            out.append(("edge", idx, 1))
    return out


def _move_half_edges(G: DualGraph, moved: Iterable[tuple], target: int):
    """Reattach half-edges to vertex ``target``; returns (edges, legs) lists."""
    edges = [list(e) for e in G.edges]
    legs = [list(leg) for leg in G.legs]
    for h in moved:
        if h[0] == "leg":
            legs[h[1]][0] = target
        else:
            edges[h[1]][h[2]] = target
    return edges, legs


def one_step_degenerations(G: DualGraph, trees_only: bool = False) -> Iterator[DualGraph]:
    """Stable graphs with one more edge that contract back to G."""
    for v, gv in enumerate(G.genera):
        if gv >= 1 and not trees_only:
            genera = list(G.genera)
            genera[v] -= 1
            H = DualGraph(tuple(genera), G.edges + ((v, v, 0, 0),), G.legs, G.classes)
            if is_stable(H):
                yield H
        hes = _half_edges(G, v)
        w = G.num_vertices
        for g1 in range(gv + 1):
            for mask in range(1 << len(hes)):
                moved = [h for i, h in enumerate(hes) if mask >> i & 1]
                edges, legs = _move_half_edges(G, moved, w)
                genera = list(G.genera) + [gv - g1]
                genera[v] = g1
                classes = tuple(G.classes) + ("",) if G.classes else ()
                H = DualGraph(
                    tuple(genera),
                    tuple(tuple(e) for e in edges) + ((v, w, 0, 0),),
                    tuple(tuple(x) for x in legs),
                    classes,
                )
                if is_stable(H):
                    yield H


def _check_cap(g: int, n: int, max_dim: int) -> None:
    if 3 * g - 3 + n > max_dim:
        raise ResourceCapError(
            f"dimension {3 * g - 3 + n} of ({g}, {n}) exceeds max_dim={max_dim}", "max_dim"
        )


@lru_cache(maxsize=None)
def _connected_classes(g: int, n: int, trees_only: bool) -> tuple[GraphClass, ...]:
    smooth = DualGraph((g,), (), tuple((0, 0) for _ in range(n)))
    if not is_stable(smooth):
        return ()
    found = {canonical(smooth)}
    frontier = [canonical(smooth)]
    while frontier:
        nxt = []
        for G in frontier:
            for H in one_step_degenerations(G, trees_only):
                c = canonical(H)
                if c not in found:
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    return tuple(sorted(canonical_class(G) for G in found))


def _component_layouts(g: int, n: int) -> Iterator[list[tuple[int, tuple[int, ...]]]]:
    """Multisets of (genus, leg labels) for stable components with
    sum (g_c - 1) = g - 1 covering legs 1..n."""
    budget = g - 1

    def legless(rest: int, lo: int) -> Iterator[list[tuple[int, tuple[int, ...]]]]:
        # legless components need genus >= 2; each contributes g_c - 1 >= 1
        if rest == 0:
            yield []
            return
        for c in range(lo, rest + 1):
            for tail in legless(rest - c, c):
                yield [(c + 1, ())] + tail

    def assign(remaining: tuple[int, ...], used: int):
        if not remaining:
            rest = budget - used
            if rest >= 0:
                yield from legless(rest, 1)
            return
        first, others = remaining[0], remaining[1:]
        max_genus = budget - used + len(others) // 3 + 2
        for size in range(len(others) + 1):
            for extra in combinations(others, size):
                block = (first,) + extra
                left = tuple(x for x in others if x not in extra)
                for gc in range(0, max_genus + 1):
                    if 2 * gc - 2 + len(block) <= 0:
                        continue
                    for tail in assign(left, used + gc - 1):
                        yield [(gc, block)] + tail

    for layout in assign(tuple(range(1, n + 1)), 0):
        if layout:
            yield layout


def enumerate_stable(
    g: int,
    n: int,
    connected: bool = True,
    *,
    dim: int | None = None,
    trees_only: bool = False,
    max_dim: int = DEFAULT_MAX_DIM,
) -> list[GraphClass]:
    """All isomorphism classes of stable graphs of genus g with legs 1..n.

    ``dim`` keeps only strata of that dimension; ``trees_only`` restricts to
    graphs whose components are trees. Disconnected graphs may have g = -1
    or lower.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if connected and g < 0:
        return []
    _check_cap(g, n, max_dim)
    if connected:
        out = list(_connected_classes(g, n, trees_only))
    else:
        seen = set()
        for layout in _component_layouts(g, n):
            pieces = [_connected_classes(gc, len(block), trees_only) for gc, block in layout]
            labels = [block for _, block in layout]
            for combo in product(*pieces):
                G = disjoint_union([c.canonical for c in combo], labels, n)
                seen.add(canonical(G))
        out = sorted(canonical_class(G) for G in seen)
    if dim is not None:
        out = [c for c in out if stratum_dimension(c.canonical) == dim]
    return out


# --------------------------------------------------------------------------
# export


def to_dot(G: DualGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v, gv in enumerate(G.genera):
        label = f"g={gv}"
        if G.vertex_class(v):
            label += f"\\n{G.vertex_class(v)}"
        lines.append(f'  v{v} [shape=circle, label="{label}"];')
    for label, (v, p) in enumerate(G.legs, start=1):
        lines.append(f'  leg{label} [shape=plaintext, label="{label}"];')
        attr = f' [label="psi^{p}"]' if p else ""
        lines.append(f"  v{v} -- leg{label}{attr};")
    for a, b, pa, pb in G.edges:
        attr = f' [taillabel="psi^{pa}", headlabel="psi^{pb}"]' if pa or pb else ""
        lines.append(f"  v{a} -- v{b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def classes_to_json(classes: Iterable[GraphClass]) -> str:
    return json.dumps([c.to_json() for c in classes], sort_keys=True)
