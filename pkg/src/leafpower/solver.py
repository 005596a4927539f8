"""Exact solving at desk scale.

`brute_force_opt` is the deliberately dumb oracle: it enumerates candidate
pair sets in size order and keeps no cleverness, so everything else can be
checked against it. `branch_solve` is the faster search that branches on the
vertex pairs of an induced obstruction. `solve_with_kernel` runs the
kernelizer first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cliques import critical_cliques
from .graph import EditSet, Graph, MODES, apply_edits
from .kernel import Instance, kernelize
from .recognition import find_obstruction


@dataclass(frozen=True)
class Solution:
    feasible: bool
    edits: EditSet | None = None
    size: int | None = None


def _is_3lp_bits(n: int, bits) -> bool:
    """Quotient-forest membership test straight on adjacency bitmasks."""
    seen = set()
    reps = []
    for v in range(n):
        key = bits[v] | (1 << v)
        if key not in seen:
            seen.add(key)
            reps.append(v)
    c = len(reps)
    parent = list(range(c))
    for i in range(1, c):
        row = bits[reps[i]]
        for j in range(i):
            if (row >> reps[j]) & 1:
                a = i
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                b = j
                while parent[b] != b:
                    parent[b] = parent[parent[b]]
                    b = parent[b]
                if a == b:
                    return False
                parent[a] = b
    return True


def candidate_pairs(g: Graph, mode: str) -> list:
    """Mode-legal vertex pairs, in lexicographic order."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    pairs = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            edge = g.has_edge(u, v)
            if mode == "completion" and edge:
                continue
            if mode == "deletion" and not edge:
                continue
            pairs.append((u, v))
    return pairs


def brute_force_opt(g: Graph, mode: str, cap: int) -> Solution:
    """Minimum edit set of size <= cap by exhaustive enumeration.

    Candidate sets are tried in size order, lexicographically within a size,
    so the returned optimum is deterministic. Intended range is n around 10
    and cap around 4; beyond that it is the caller's wait.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    base = g.adj_bits
    n = g.n
    pairs = candidate_pairs(g, mode)
    for size in range(0, cap + 1):
        for combo in itertools.combinations(pairs, size):
            bits = list(base)
            for u, v in combo:
                bits[u] ^= 1 << v
                bits[v] ^= 1 << u
            if _is_3lp_bits(n, bits):
                return Solution(True, EditSet(frozenset(combo), mode), size)
    return Solution(False)


def _legal_now(g: Graph, mode: str, u: int, v: int) -> bool:
    if mode == "completion":
        return not g.has_edge(u, v)
    if mode == "deletion":
        return g.has_edge(u, v)
    return True


def _flip(g: Graph, u: int, v: int) -> Graph:
    bits = list(g.adj_bits)
    bits[u] ^= 1 << v
    bits[v] ^= 1 << u
    return Graph._from_bits(g.n, bits, g.labels)


def _bounded_search(g: Graph, mode: str, budget: int, edited: set, acc: list):
    if _is_3lp_bits(g.n, g.adj_bits):
        return list(acc)
    if budget == 0:
        return None
    obs = find_obstruction(g)
    verts = sorted(set(obs.vertices))
    for u, v in itertools.combinations(verts, 2):
        if (u, v) in edited:
            continue
        if not _legal_now(g, mode, u, v):
            continue
        edited.add((u, v))
        acc.append((u, v))
        found = _bounded_search(_flip(g, u, v), mode, budget - 1, edited, acc)
        acc.pop()
        edited.discard((u, v))
        if found is not None:
            return found
    return None


def branch_solve(g: Graph, mode: str, k: int) -> Solution:
    """Exact decision by branching on obstruction pairs, deepening the budget.

    Any valid edit set must touch a pair inside every induced obstruction, so
    branching over the mode-legal pairs of one obstruction is complete;
    pairs edited once are never revisited on a search path. Budgets are tried
    in increasing order, so the first hit is a minimum edit set.
    """
    if k < 0:
        raise ValueError("budget k must be >= 0")
    for budget in range(0, k + 1):
        found = _bounded_search(g, mode, budget, set(), [])
        if found is not None:
            return Solution(True, EditSet(frozenset(found), mode), len(found))
    return Solution(False)


def solve_with_kernel(inst: Instance) -> Solution:
    """Kernelize, then branch-solve the reduced instance.

    A no-instance verdict from the kernelizer short-circuits to infeasible.
    On success the edits refer to the reduced instance's vertices, not the
    original ones; the verdict and size are what carries back.
    """
    report = kernelize(inst)
    if report.verdict == "no_instance":
        return Solution(False)
    return branch_solve(report.instance.graph, inst.mode, inst.k)


def clique_uniform_opt(g: Graph, mode: str, cap: int) -> Solution:
    """Optimum over edit sets that treat critical-clique pairs uniformly.

    There is always an optimal solution that never splits a critical clique
    and either fully joins or fully separates any two cliques, so searching
    whole clique pairs (cost |K|*|K'| each) returns the true optimum size.
    Used as a cross-check against the vertex-level brute force.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    part = critical_cliques(g)
    classes = part.classes
    moves = []
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            a, b = classes[i][0], classes[j][0]
            edge = g.has_edge(a, b)
            if mode == "completion" and edge:
                continue
            if mode == "deletion" and not edge:
                continue
            cost = len(classes[i]) * len(classes[j])
            if cost <= cap:
                moves.append((i, j, cost))
    best = None
    best_pairs = None
    if _is_3lp_bits(g.n, g.adj_bits):
        best, best_pairs = 0, frozenset()
    for count in range(1, cap + 1):
        for combo in itertools.combinations(moves, count):
            cost = sum(c for _, _, c in combo)
            if cost > cap or (best is not None and cost >= best):
                continue
            pairs = frozenset(
                (u, v) if u < v else (v, u)
                for i, j, _ in combo
                for u in classes[i]
                for v in classes[j]
            )
            g2 = apply_edits(g, EditSet(pairs, "edition"))
            if _is_3lp_bits(g2.n, g2.adj_bits):
                best = cost
                best_pairs = pairs
    if best is None:
        return Solution(False)
    return Solution(True, EditSet(best_pairs, mode), best)
