"""Critical cliques and the quotient graph they induce.

A critical clique is a maximal vertex set that is simultaneously a clique and
a module; these are exactly the true-twin classes (equal closed
neighborhoods), so the partition is computed by neighborhood grouping rather
than by full modular decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, connected_components


@dataclass(frozen=True)
class CriticalCliquePartition:
    """Partition of V into critical cliques, ordered by smallest member."""

    classes: tuple
    class_of: tuple

    def __len__(self):
        return len(self.classes)


@dataclass(frozen=True)
class CriticalCliqueGraph:
    """Quotient of a graph by its critical cliques.

    Node i stands for `classes[i]`; two nodes are adjacent exactly when their
    classes are fully joined in the original graph. Node numbering follows the
    smallest contained vertex id, so the quotient is reproducible.
    """

    graph: Graph
    classes: tuple
    class_of: tuple

    @property
    def node_sizes(self) -> tuple:
        return tuple(len(c) for c in self.classes)

    @property
    def is_forest(self) -> bool:
        q = self.graph
        return q.m == q.n - len(connected_components(q))


def critical_cliques(g: Graph) -> CriticalCliquePartition:
    """Group vertices by closed neighborhood; each group is a critical clique."""
    groups = {}
    bits = g.adj_bits
    for v in range(g.n):
        groups.setdefault(bits[v] | (1 << v), []).append(v)
    classes = tuple(tuple(members) for members in groups.values())
    class_of = [0] * g.n
    for i, members in enumerate(classes):
        for v in members:
            class_of[v] = i
    return CriticalCliquePartition(classes=classes, class_of=tuple(class_of))


def critical_clique_graph(g: Graph) -> CriticalCliqueGraph:
    """The quotient graph on the critical cliques of g."""
    part = critical_cliques(g)
    reps = [members[0] for members in part.classes]
    c = len(reps)
    bits = [0] * c
    gb = g.adj_bits
    for i in range(c):
        ri = gb[reps[i]]
        for j in range(i + 1, c):
            if (ri >> reps[j]) & 1:
                bits[i] |= 1 << j
                bits[j] |= 1 << i
    quotient = Graph._from_bits(c, bits)
    return CriticalCliqueGraph(graph=quotient, classes=part.classes, class_of=part.class_of)
