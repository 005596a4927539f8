"""Seeded instance generators: G(n,p) graphs, random 3-leaf powers built from
random leaf trees, and mode-legal perturbations with a certified budget."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .graph import EditSet, Graph, MODES, apply_edits

KINDS = ("random_gnp", "random_tree_3lp", "perturbed_3lp")


@dataclass(frozen=True)
class GeneratorSpec:
    """A reproducible graph recipe: the same spec always builds the same graph."""

    kind: str
    n: int
    p: float | None = None
    r: int | None = None
    mode: str = "edition"
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")


def build(spec: GeneratorSpec) -> Graph:
    if spec.kind == "random_gnp":
        return gen_random_gnp(spec.n, spec.p if spec.p is not None else 0.5, spec.seed)
    if spec.kind == "random_tree_3lp":
        return gen_random_3lp(spec.n, spec.seed)
    base = gen_random_3lp(spec.n, spec.seed)
    perturbed, _ = perturb(base, spec.r or 0, spec.mode, spec.seed + 1)
    return perturbed


def gen_random_gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def _random_tree(t: int, rng: random.Random) -> list:
    """Random tree on t nodes decoded from a random parent sequence."""
    if t <= 1:
        return []
    if t == 2:
        return [(0, 1)]
    seq = [rng.randrange(t) for _ in range(t - 2)]
    degree = [1] * t
    for s in seq:
        degree[s] += 1
    heap = [v for v in range(t) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for s in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, s) if leaf < s else (s, leaf))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(heap, s)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((u, v) if u < v else (v, u))
    return edges


def gen_random_3lp(n: int, seed: int, internal_nodes: int | None = None) -> Graph:
    """Random 3-leaf power: take a random tree, hang n leaves on it (each
    internal node gets at least one), connect leaves within tree distance 3.

    The result is the graph on the n leaves; two leaves are adjacent exactly
    when they share an internal node or sit on adjacent internal nodes, so
    membership holds by construction.
    """
    rng = random.Random(seed)
    if n == 0:
        return Graph(0)
    t = internal_nodes if internal_nodes is not None else rng.randint(1, n)
    if not 1 <= t <= n:
        raise ValueError("internal node count must be between 1 and n")
    tree_edges = _random_tree(t, rng)
    adj = [set() for _ in range(t)]
    for a, b in tree_edges:
        adj[a].add(b)
        adj[b].add(a)
    owner = list(range(t)) + [rng.randrange(t) for _ in range(n - t)]
    rng.shuffle(owner)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if owner[i] == owner[j] or owner[j] in adj[owner[i]]:
                edges.append((i, j))
    return Graph(n, edges)


def perturb(g: Graph, r: int, mode: str, seed: int):
    """Apply r random flips that an edit set of the given mode can undo.

    Edition flips arbitrary pairs; for completion only edges are deleted (the
    undo adds them back); for deletion only non-edges are inserted. Returns
    (graph, r): the result is a yes-instance of the mode at budget r by
    construction.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if r < 0:
        raise ValueError("r must be >= 0")
    rng = random.Random(seed)
    if mode == "completion":
        candidates = g.edges()
    elif mode == "deletion":
        candidates = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
    else:
        candidates = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    if r > len(candidates):
        raise ValueError(f"cannot pick {r} flips from {len(candidates)} legal pairs")
    chosen = rng.sample(candidates, r)
    flipped = apply_edits(g, EditSet(frozenset(chosen), "edition"))
    return flipped, r
