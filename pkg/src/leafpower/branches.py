"""Branch detection on the critical clique graph.

A branch is an induced subgraph whose critical cliques span a tree in the
quotient; its attachment points are the cliques with a neighbor outside the
branch. The reduction rules consume 1-branches (one attachment) and clean
2-branches (two attachments, both leaves of the branch tree, joined by the
main path).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cliques import CriticalCliqueGraph
from .graph import Graph, connected_components


@dataclass(frozen=True)
class Branch:
    """A detected branch, expressed in quotient node ids.

    For two attachment points, `main_path` runs from one attachment to the
    other, `main_sizes` are the clique sizes along it, and the min-cut fields
    give the cheapest consecutive separation of the path.
    """

    nodes: frozenset
    attachments: tuple
    main_path: tuple | None = None
    main_sizes: tuple | None = None
    clean: bool = False
    mincut_value: int | None = None
    mincut_index: int | None = None

    @property
    def arity(self) -> int:
        return len(self.attachments)

    @property
    def q(self) -> int:
        return len(self.main_path) if self.main_path is not None else 0

    @property
    def q1(self):
        """Branch neighbor of the first attachment point on the main path."""
        return self.main_path[1] if self.q >= 2 else None

    @property
    def q2(self):
        """Branch neighbor of the second attachment point on the main path."""
        return self.main_path[-2] if self.q >= 2 else None


def path_mincut(branch: Branch):
    """Cheapest consecutive cut of the main path: (min |H_i|*|H_i+1|, argmin).

    Ties resolve to the smallest index. Disconnecting a clique path always
    happens between two consecutive cliques, so this is the path's min-cut.
    """
    if branch.main_sizes is None or len(branch.main_sizes) < 2:
        raise ValueError("min-cut needs a main path of at least 2 cliques")
    return _mincut(branch.main_sizes)


def _mincut(sizes):
    best = None
    best_i = None
    for i in range(len(sizes) - 1):
        cost = sizes[i] * sizes[i + 1]
        if best is None or cost < best:
            best = cost
            best_i = i
    return best, best_i


def branch_vertices(ccg: CriticalCliqueGraph, branch: Branch) -> frozenset:
    """All graph vertices covered by the branch's cliques."""
    out = set()
    for node in branch.nodes:
        out.update(ccg.classes[node])
    return frozenset(out)


def branch_core_vertices(ccg: CriticalCliqueGraph, branch: Branch) -> frozenset:
    """Branch vertices minus the attachment-point cliques."""
    out = set()
    for node in branch.nodes:
        if node not in branch.attachments:
            out.update(ccg.classes[node])
    return frozenset(out)


def inner_neighborhood(ccg: CriticalCliqueGraph, branch: Branch, attachment: int) -> frozenset:
    """Vertices of the branch adjacent to the attachment clique."""
    out = set()
    for node in branch.nodes:
        if node != attachment and ccg.graph.has_edge(node, attachment):
            out.update(ccg.classes[node])
    return frozenset(out)


def outside_neighborhood(g: Graph, ccg: CriticalCliqueGraph, branch: Branch, attachment: int) -> frozenset:
    """Neighbors of the attachment clique outside the branch."""
    rep = ccg.classes[attachment][0]
    inside = branch_vertices(ccg, branch)
    return frozenset(v for v in g.neighbors(rep) if v not in inside)


def _induces_tree(q: Graph, nodes) -> bool:
    nodes = set(nodes)
    edges = 0
    for u, v in itertools.combinations(sorted(nodes), 2):
        if q.has_edge(u, v):
            edges += 1
    if edges != len(nodes) - 1:
        return False
    start = min(nodes)
    seen = {start}
    queue = [start]
    while queue:
        v = queue.pop()
        for u in q.neighbors(v):
            if u in nodes and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(nodes)


def _components_without(q: Graph, comp, drop: int) -> list:
    rest = [v for v in comp if v != drop]
    seen = set()
    pieces = []
    for s in rest:
        if s in seen:
            continue
        piece = {s}
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop()
            for u in q.neighbors(v):
                if u != drop and u not in seen:
                    seen.add(u)
                    piece.add(u)
                    queue.append(u)
        pieces.append(piece)
    return pieces


def find_1_branches(g: Graph, ccg: CriticalCliqueGraph) -> list:
    """Maximal branches with exactly one attachment point.

    For each candidate attachment node P, the branch is P plus every
    component of the quotient minus P that induces a tree together with P; it
    qualifies only if some component stays outside (otherwise P has no outside
    neighbor and the whole component is a leaf power matter). Results are
    filtered to inclusion-maximal node sets and ordered largest first, then by
    smallest node id.
    """
    q = ccg.graph
    comps = connected_components(q)
    comp_of = {}
    for comp in comps:
        for v in comp:
            comp_of[v] = comp
    found = []
    for p in range(q.n):
        comp = comp_of[p]
        if len(comp) == 1:
            continue
        pieces = _components_without(q, comp, p)
        good = [piece for piece in pieces if _induces_tree(q, piece | {p})]
        if len(good) == len(pieces):
            continue
        nodes = {p}
        for piece in good:
            nodes.update(piece)
        found.append(Branch(nodes=frozenset(nodes), attachments=(p,)))
    found.sort(key=lambda b: (-len(b.nodes), min(b.nodes)))
    kept = []
    for b in found:
        if any(b.nodes < other.nodes for other in kept):
            continue
        kept.append(b)
    return kept


def _piece_order(piece, nbrs_in_piece):
    """Order a path/cycle piece of the quotient core; returns (order, is_cycle)."""
    ends = sorted(v for v in piece if len(nbrs_in_piece[v]) <= 1)
    if not ends:
        # cycle: walk from the largest node so the emitted arc contains the rest
        start = max(piece)
        order = [start]
        prev = None
        cur = start
        while True:
            nxt = [u for u in nbrs_in_piece[cur] if u != prev]
            step = min(nxt)
            if step == start:
                break
            order.append(step)
            prev, cur = cur, step
        return order, True
    start = ends[0]
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [u for u in nbrs_in_piece[cur] if u != prev]
        if not nxt:
            break
        order.append(nxt[0])
        prev, cur = cur, nxt[0]
    return order, False


def find_clean_2_branches(g: Graph, ccg: CriticalCliqueGraph) -> list:
    """Clean 2-branches: a quotient chain with its interior pendant cliques.

    Pendant quotient nodes are set aside first; maximal chains of remaining
    nodes with at most two chain neighbors become main paths, with the
    pendants of interior chain nodes folded back into the branch. A core
    component that is a pure cycle contributes its longest arc (the cycle
    minus its largest node). Chain endpoints always have an outside neighbor,
    so they are the two attachment points and are leaves of the branch tree.
    """
    q = ccg.graph
    out = []
    for comp in connected_components(q):
        if len(comp) < 3:
            continue
        pendants = {v for v in comp if q.degree(v) == 1}
        core = [v for v in comp if v not in pendants]
        if not core:
            continue
        coreset = set(core)
        core_nbrs = {v: [u for u in q.neighbors(v) if u in coreset] for v in core}
        chain_nodes = {v for v in core if len(core_nbrs[v]) <= 2}
        seen = set()
        for s in sorted(chain_nodes):
            if s in seen:
                continue
            piece = {s}
            queue = [s]
            while queue:
                v = queue.pop()
                for u in core_nbrs[v]:
                    if u in chain_nodes and u not in piece:
                        piece.add(u)
                        queue.append(u)
            seen.update(piece)
            nbrs_in_piece = {v: [u for u in core_nbrs[v] if u in piece] for v in piece}
            order, is_cycle = _piece_order(piece, nbrs_in_piece)
            chain = order[1:] if is_cycle else order
            if len(chain) < 2:
                continue
            interior = chain[1:-1]
            pend_in = set()
            for v in interior:
                for u in q.neighbors(v):
                    if u in pendants:
                        pend_in.add(u)
            nodes = frozenset(chain) | frozenset(pend_in)
            sizes = tuple(len(ccg.classes[c]) for c in chain)
            value, index = _mincut(sizes)
            out.append(
                Branch(
                    nodes=nodes,
                    attachments=(chain[0], chain[-1]),
                    main_path=tuple(chain),
                    main_sizes=sizes,
                    clean=True,
                    mincut_value=value,
                    mincut_index=index,
                )
            )
    out.sort(key=lambda b: (-b.q, b.main_path))
    return out
