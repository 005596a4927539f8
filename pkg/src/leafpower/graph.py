"""Undirected simple graphs on dense integer ids, plus the small-pattern
primitives (bull / dart / gem / chordless cycle) everything else builds on.

Adjacency is one int bitmask per vertex, which keeps the hot loops (twin
partitioning, edit-set enumeration) cheap at desk scale. Graphs are immutable
after construction; every operation returns a fresh value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

MODES = ("edition", "completion", "deletion")

# Role conventions for the three 5-vertex obstructions, as index pairs:
#   bull: triangle 0-1-2, pendant 3 on 0, pendant 4 on 1
#   dart: K4 minus the edge (2,3), pendant 4 on 0
#   gem:  path 0-1-2-3 plus a dominating vertex 4
PATTERN_EDGES = {
    "bull": frozenset({(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)}),
    "dart": frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)}),
    "gem": frozenset({(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)}),
}
SMALL_PATTERNS = ("bull", "dart", "gem")
PATTERNS = SMALL_PATTERNS + ("hole",)

_PERMS5 = tuple(itertools.permutations(range(5)))


def _role_degrees(edges):
    d = [0] * 5
    for a, b in edges:
        d[a] += 1
        d[b] += 1
    return tuple(d)


_ROLE_DEGREES = {name: _role_degrees(e) for name, e in PATTERN_EDGES.items()}
_DEGREE_SIGNATURES = {name: tuple(sorted(d)) for name, d in _ROLE_DEGREES.items()}


class GraphFormatError(ValueError):
    """Malformed edge-list text."""


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Optional `labels` carry external vertex names through reductions that
    delete and add vertices. Equality compares vertex count, edges and labels.
    """

    __slots__ = ("n", "_bits", "_labels")

    def __init__(self, n: int, edges=(), labels=None):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        bits = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n = n
        self._bits = tuple(bits)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
        self._labels = labels

    @classmethod
    def _from_bits(cls, n, bits, labels=None):
        # No validation: bits must already be symmetric and irreflexive.
        g = object.__new__(cls)
        g.n = n
        g._bits = tuple(bits)
        g._labels = labels
        return g

    @property
    def adj_bits(self) -> tuple:
        """Per-vertex adjacency bitmasks (vertex v is bit 1 << v)."""
        return self._bits

    @property
    def labels(self):
        return self._labels

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels is not None else str(v)

    def label_list(self) -> list:
        return [self.label(v) for v in range(self.n)]

    def relabeled(self, labels) -> "Graph":
        return Graph._from_bits(self.n, self._bits, tuple(str(x) for x in labels))

    @property
    def m(self) -> int:
        return sum(b.bit_count() for b in self._bits) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return (self._bits[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self._bits[v].bit_count()

    def neighbors(self, v: int) -> tuple:
        return tuple(_members(self._bits[v]))

    def edges(self) -> list:
        out = []
        for u in range(self.n):
            row = self._bits[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._bits == other._bits
            and self._labels == other._labels
        )

    def __hash__(self):
        return hash((self.n, self._bits, self._labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _members(mask: int):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


@dataclass(frozen=True)
class EditSet:
    """A set of unordered vertex pairs with a modification mode.

    Pairs are normalized to (min, max); completion pairs must be non-edges
    and deletion pairs must be edges of the graph they are applied to.
    """

    pairs: frozenset
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        norm = set()
        for u, v in self.pairs:
            if u == v:
                raise ValueError(f"pair ({u},{v}) is not a vertex pair")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "pairs", frozenset(norm))

    def __len__(self):
        return len(self.pairs)

    def sorted_pairs(self) -> list:
        return sorted(self.pairs)


def apply_edits(g: Graph, f: EditSet) -> Graph:
    """Return g with f.pairs flipped (symmetric difference on the edge set)."""
    for u, v in f.pairs:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"pair ({u},{v}) outside vertex range")
        if f.mode == "completion" and g.has_edge(u, v):
            raise ValueError(f"completion pair ({u},{v}) is already an edge")
        if f.mode == "deletion" and not g.has_edge(u, v):
            raise ValueError(f"deletion pair ({u},{v}) is not an edge")
    bits = list(g.adj_bits)
    for u, v in f.pairs:
        bits[u] ^= 1 << v
        bits[v] ^= 1 << u
    return Graph._from_bits(g.n, bits, g.labels)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by `vertices`, re-indexed densely in sorted id order.

    Labels of the kept vertices are retained, so reductions stay traceable.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(keep)}
    bits = [0] * len(keep)
    for v in keep:
        row = g.adj_bits[v]
        new = 0
        for u in keep:
            if (row >> u) & 1:
                new |= 1 << pos[u]
        bits[pos[v]] = new
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in keep)
    return Graph._from_bits(len(keep), bits, labels)


def connected_components(g: Graph) -> list:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop()
            for u in _members(g.adj_bits[v]):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def find_small_pattern(g: Graph, kinds=SMALL_PATTERNS):
    """First 5-subset (lexicographic) inducing any of `kinds`.

    Returns (kind, role-ordered vertex tuple) or None. Within one subset the
    kinds are tried in the given order, then role assignments in lexicographic
    permutation order, so results are reproducible.
    """
    sigs = [(k, _DEGREE_SIGNATURES[k], _ROLE_DEGREES[k], PATTERN_EDGES[k]) for k in kinds]
    candidates = [v for v in range(g.n) if g.degree(v) >= 1]
    bits = g.adj_bits
    for combo in itertools.combinations(candidates, 5):
        rows = []
        for a in combo:
            row = 0
            for j, b in enumerate(combo):
                if (bits[a] >> b) & 1:
                    row |= 1 << j
            rows.append(row)
        degs = tuple(sorted(r.bit_count() for r in rows))
        for kind, sig, role_deg, want in sigs:
            if degs != sig:
                continue
            for perm in _PERMS5:
                ok = True
                for r in range(5):
                    if rows[perm[r]].bit_count() != role_deg[r]:
                        ok = False
                        break
                if not ok:
                    continue
                for a, b in want:
                    if not (rows[perm[a]] >> perm[b]) & 1:
                        ok = False
                        break
                if ok:
                    return kind, tuple(combo[perm[r]] for r in range(5))
    return None


def find_induced(g: Graph, pattern: str):
    """Vertex tuple inducing `pattern` (bull, dart, gem, or hole), else None.

    For "hole" the tuple is a chordless cycle of length >= 4 in cyclic order,
    rotated so the smallest vertex comes first.
    """
    if pattern == "hole":
        return find_hole(g)
    if pattern not in PATTERN_EDGES:
        raise ValueError(f"unknown pattern {pattern!r}")
    hit = find_small_pattern(g, (pattern,))
    return hit[1] if hit is not None else None


def induces_pattern(g: Graph, pattern: str, verts) -> bool:
    """Check that `verts`, in role order, induce exactly `pattern` in g."""
    verts = tuple(verts)
    if len(set(verts)) != len(verts):
        return False
    if any(not 0 <= v < g.n for v in verts):
        return False
    if pattern == "hole":
        L = len(verts)
        if L < 4:
            return False
        for i in range(L):
            for j in range(i + 1, L):
                consecutive = j - i == 1 or (i == 0 and j == L - 1)
                if g.has_edge(verts[i], verts[j]) != consecutive:
                    return False
        return True
    if pattern not in PATTERN_EDGES or len(verts) != 5:
        return False
    want = PATTERN_EDGES[pattern]
    for i in range(5):
        for j in range(i + 1, 5):
            if g.has_edge(verts[i], verts[j]) != ((i, j) in want):
                return False
    return True


# -- chordless cycle search ---------------------------------------------------

def _mcs_order(g: Graph) -> list:
    """Maximum cardinality search visit order (ties to the smallest id)."""
    weight = [0] * g.n
    visited = [False] * g.n
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not visited[v] and (best == -1 or weight[v] > weight[best]):
                best = v
        order.append(best)
        visited[best] = True
        for u in _members(g.adj_bits[best]):
            if not visited[u]:
                weight[u] += 1
    return order


def _is_chordal(g: Graph) -> bool:
    order = _mcs_order(g)
    elim = order[::-1]
    pos = [0] * g.n
    for i, v in enumerate(elim):
        pos[v] = i
    for v in elim:
        later = [u for u in _members(g.adj_bits[v]) if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=lambda u: pos[u])
        rest = 0
        for u in later:
            if u != p:
                rest |= 1 << u
        if rest & ~g.adj_bits[p]:
            return False
    return True


def _bfs_path(g: Graph, src: int, dst: int, blocked: int):
    """Shortest src-dst path avoiding `blocked` vertices, or None."""
    prev = {src: None}
    queue = [src]
    while queue:
        nxt = []
        for v in queue:
            for u in _members(g.adj_bits[v]):
                if u in prev or (blocked >> u) & 1:
                    continue
                prev[u] = v
                if u == dst:
                    path = [u]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                nxt.append(u)
        queue = nxt
    return None


def canonical_cycle(cycle) -> tuple:
    """Rotate/reflect a cyclic vertex sequence to a canonical form."""
    cyc = list(cycle)
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if len(cyc) > 2 and cyc[1] > cyc[-1]:
        cyc = [cyc[0]] + cyc[1:][::-1]
    return tuple(cyc)


def find_hole(g: Graph):
    """A chordless cycle of length >= 4 in cyclic order, or None.

    Chordal graphs are dismissed by an elimination-ordering test; otherwise a
    hole is extracted by scanning non-adjacent neighbor pairs (u, w) of each
    vertex v for a shortest u-w path outside N[v]. Shortest paths are induced,
    so v plus the path is chordless.
    """
    if g.n < 4 or _is_chordal(g):
        return None
    for v in range(g.n):
        nbrs = g.neighbors(v)
        closed = g.adj_bits[v] | (1 << v)
        for u, w in itertools.combinations(nbrs, 2):
            if g.has_edge(u, w):
                continue
            blocked = closed & ~(1 << u) & ~(1 << w)
            path = _bfs_path(g, u, w, blocked)
            if path is not None:
                return canonical_cycle([v] + path)
    raise AssertionError("non-chordal graph without an extractable hole")


# -- edge-list text format ----------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the shared text format: a "n m" header, then m lines "u v".

    Blank lines and lines starting with '#' are ignored. Vertex ids are
    0-based. Self-loops, duplicate edges, out-of-range ids and count
    mismatches are rejected.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("empty input, expected a 'n m' header line")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative counts in header")
    if len(rows) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    seen = set()
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: edge endpoints must be integers") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
