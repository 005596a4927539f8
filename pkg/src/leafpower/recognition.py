"""3-leaf-power recognition with certificates in both directions.

A graph is a 3-leaf power exactly when its critical clique graph is a forest,
equivalently when it contains no induced bull, dart, gem or chordless cycle
of length at least 4. `recognize` decides via the quotient-forest test and
returns either a leaf root built from the quotient or one of the forbidden
patterns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import CriticalCliqueGraph, critical_clique_graph
from .graph import (
    Graph,
    canonical_cycle,
    connected_components,
    find_hole,
    find_small_pattern,
    induces_pattern,
)


@dataclass(frozen=True)
class Obstruction:
    """An induced forbidden subgraph: kind plus the inducing vertex tuple.

    For the 5-vertex kinds the tuple is in role order (see
    graph.PATTERN_EDGES); for a hole it is the cycle in cyclic order.
    """

    kind: str
    vertices: tuple


@dataclass(frozen=True)
class LeafRoot:
    """A tree whose leaves realize the graph: uv is an edge iff the mapped
    leaves are within tree distance 3."""

    tree: Graph
    leaf_map: dict


@dataclass(frozen=True)
class RecognitionResult:
    accepted: bool
    leaf_root: LeafRoot | None = None
    obstruction: Obstruction | None = None


def is_3_leaf_power(g: Graph) -> bool:
    """Certificate-free membership test: is the critical clique graph a forest?"""
    return critical_clique_graph(g).is_forest


def recognize(g: Graph) -> RecognitionResult:
    """Decide membership and produce a certificate either way."""
    ccg = critical_clique_graph(g)
    if ccg.is_forest:
        return RecognitionResult(True, leaf_root=build_leaf_root(ccg))
    return RecognitionResult(False, obstruction=find_obstruction(g, ccg))


def find_obstruction(g: Graph, ccg: CriticalCliqueGraph | None = None):
    """An induced bull/dart/gem if one exists, otherwise a hole; None on
    3-leaf powers.

    The 5-vertex patterns are scanned first (holes last), per 5-subset in
    lexicographic order. Holes are lifted from a hole of the quotient graph:
    picking one vertex per quotient node of a chordless quotient cycle yields
    a chordless cycle of the same length in g.
    """
    hit = find_small_pattern(g)
    if hit is not None:
        kind, verts = hit
        return Obstruction(kind, verts)
    if ccg is None:
        ccg = critical_clique_graph(g)
    qhole = find_hole(ccg.graph)
    if qhole is None:
        return None
    verts = canonical_cycle([ccg.classes[node][0] for node in qhole])
    return Obstruction("hole", verts)


def build_leaf_root(ccg: CriticalCliqueGraph) -> LeafRoot:
    """Build a leaf root from a forest-shaped critical clique graph.

    One internal tree node per quotient node, connected along quotient edges;
    each graph vertex hangs as a leaf under its clique's internal node.
    Distinct quotient components are stitched together through a fresh hub via
    two-edge paths, which keeps every cross-component leaf pair at distance at
    least 6.
    """
    if not ccg.is_forest:
        raise ValueError("critical clique graph contains a cycle")
    c = ccg.graph.n
    edges = list(ccg.graph.edges())
    nxt = c
    leaf_map = {}
    for node in range(c):
        for v in ccg.classes[node]:
            leaf_map[v] = nxt
            edges.append((node, nxt))
            nxt += 1
    comps = connected_components(ccg.graph)
    if len(comps) > 1:
        hub = nxt
        nxt += 1
        for comp in comps:
            mid = nxt
            nxt += 1
            edges.append((hub, mid))
            edges.append((mid, comp[0]))
    return LeafRoot(tree=Graph(nxt, edges), leaf_map=leaf_map)


def leaf_root_is_valid(g: Graph, root: LeafRoot) -> bool:
    """Check the defining property: d_tree <= 3 on mapped leaves iff adjacency."""
    t = root.tree
    if t.m != t.n - len(connected_components(t)):
        return False
    if g.n and len(connected_components(t)) != 1:
        return False
    mapped = list(root.leaf_map.items())
    if len(root.leaf_map) != g.n or set(root.leaf_map) != set(range(g.n)):
        return False
    leaves = [node for _, node in mapped]
    if len(set(leaves)) != len(leaves):
        return False
    if any(t.degree(node) > 1 for node in leaves):
        return False
    near = {}
    for v, node in mapped:
        # vertices whose leaves sit within distance 3 of this leaf
        dist = {node: 0}
        frontier = [node]
        for d in range(1, 4):
            nxt = []
            for x in frontier:
                for y in t.neighbors(x):
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            frontier = nxt
        near[v] = dist
    for v in range(g.n):
        for u in range(v + 1, g.n):
            close = root.leaf_map[u] in near[v]
            if close != g.has_edge(u, v):
                return False
    return True


def obstruction_is_valid(g: Graph, obs: Obstruction) -> bool:
    return induces_pattern(g, obs.kind, obs.vertices)


def join_compose(g1: Graph, s1, g2: Graph, s2) -> Graph:
    """Disjoint union of g1 and g2 plus all edges between s1 and s2.

    g2's vertices are shifted by g1.n in the result. Labels are dropped.
    """
    s1 = sorted(set(s1))
    s2 = sorted(set(s2))
    if not s1 or not s2:
        raise ValueError("join sides must be nonempty")
    if any(not 0 <= v < g1.n for v in s1):
        raise ValueError("s1 contains vertices outside g1")
    if any(not 0 <= v < g2.n for v in s2):
        raise ValueError("s2 contains vertices outside g2")
    edges = list(g1.edges())
    edges.extend((u + g1.n, v + g1.n) for u, v in g2.edges())
    edges.extend((u, v + g1.n) for u in s1 for v in s2)
    return Graph(g1.n + g2.n, edges)
