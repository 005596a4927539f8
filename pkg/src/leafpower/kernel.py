"""Variant-specific reduction rules and the fixpoint kernelization driver.

Each rule maps an instance to a reduced instance plus replayable trace
records; `kernelize` applies the mode's rule set (edition and deletion:
1,2,3,4,5; completion: 1,2,3,4,6) in passes until nothing changes, or until
the completion rule proves there is no solution within budget.

Rules whose literal replacement would reproduce an isomorphic copy of what
they remove (a pendant clique already in reduced form, a corridor already in
gadget shape, two sibling (k+1)-cliques) are treated as not applicable, so
the fixpoint is reachable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .branches import (
    branch_core_vertices,
    branch_vertices,
    find_1_branches,
    find_clean_2_branches,
    inner_neighborhood,
    outside_neighborhood,
)
from .cliques import critical_clique_graph, critical_cliques
from .graph import MODES, Graph, connected_components, induced_subgraph

RULESETS = {
    "edition": (1, 2, 3, 4, 5),
    "deletion": (1, 2, 3, 4, 5),
    "completion": (1, 2, 3, 4, 6),
}

_MAX_APPLICATIONS = 10_000


@dataclass(frozen=True)
class Instance:
    graph: Graph
    k: int
    mode: str

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget k must be >= 0")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class RuleRecord:
    """One rule application: the witness it fired on, what it removed, and
    what it added (fresh vertices plus every edge incident to new structure),
    all in vertex labels so the trace replays across re-indexing."""

    rule: int
    witness: tuple
    removed: tuple
    added: tuple
    added_edges: tuple


@dataclass(frozen=True)
class RuleOutcome:
    applied: bool
    instance: Instance
    records: tuple = ()
    no_instance: bool = False


@dataclass(frozen=True)
class KernelStats:
    mode: str
    k: int
    vertices_before: int
    vertices_after: int
    cliques_before: int
    cliques_after: int
    vertex_bound: int
    clique_bound: int
    within_vertex_bound: bool
    within_clique_bound: bool


@dataclass(frozen=True)
class KernelReport:
    verdict: str  # "reduced" | "no_instance"
    instance: Instance
    trace: tuple
    stats: KernelStats


def vertex_bound(mode: str, k: int) -> int:
    """Guaranteed kernel size (in vertices) for reducible yes-instances."""
    if mode == "completion":
        return 16 * k**3 + 54 * k**2 + 38 * k
    return 8 * k**3 + 78 * k**2 + 70 * k


def clique_bound(mode: str, k: int) -> int:
    """Guaranteed number of critical cliques for reducible yes-instances."""
    if mode == "completion":
        return 16 * k**2 + 38 * k
    return 8 * k**2 + 70 * k


# -- label bookkeeping ---------------------------------------------------------

def ensure_labels(inst: Instance) -> Instance:
    """Give the instance unique string labels if it has none."""
    g = inst.graph
    if g.labels is None:
        g = g.relabeled([str(v) for v in range(g.n)])
    if len(set(g.labels)) != g.n:
        raise ValueError("kernelization needs unique vertex labels")
    if g is inst.graph:
        return inst
    return Instance(g, inst.k, inst.mode)


def _fresh_labels(g: Graph, rule: int, count: int) -> list:
    used = set(g.labels)
    out = []
    i = 0
    while len(out) < count:
        cand = f"r{rule}v{i}"
        if cand not in used:
            out.append(cand)
            used.add(cand)
        i += 1
    return out


def _labels_of(g: Graph, vertices) -> tuple:
    return tuple(sorted(g.label(v) for v in vertices))


def _remove(g: Graph, doomed) -> Graph:
    doomed = set(doomed)
    return induced_subgraph(g, [v for v in range(g.n) if v not in doomed])


def _append_clique(g: Graph, labels) -> Graph:
    size = len(labels)
    bits = list(g.adj_bits) + [0] * size
    ids = range(g.n, g.n + size)
    for a, b in itertools.combinations(ids, 2):
        bits[a] |= 1 << b
        bits[b] |= 1 << a
    return Graph._from_bits(g.n + size, bits, tuple(g.label_list() + list(labels)))


def _join_labels(g: Graph, left, right) -> Graph:
    idx = {lb: v for v, lb in enumerate(g.labels)}
    bits = list(g.adj_bits)
    for la in left:
        for lb in right:
            a, b = idx[la], idx[lb]
            if a != b:
                bits[a] |= 1 << b
                bits[b] |= 1 << a
    return Graph._from_bits(g.n, bits, g.labels)


def _cross_pairs(left, right):
    return tuple((la, lb) for la in left for lb in right if la != lb)


def _clique_pairs(labels):
    return tuple(itertools.combinations(labels, 2))


# -- rules ---------------------------------------------------------------------

def drop_leaf_power_components(inst: Instance) -> RuleOutcome:
    """Rule 1: delete every connected component that already is a 3-leaf power."""
    g = inst.graph
    removable = []
    for comp in connected_components(g):
        if critical_clique_graph(induced_subgraph(g, comp)).is_forest:
            removable.append(comp)
    if not removable:
        return RuleOutcome(False, inst)
    records = []
    doomed = set()
    for comp in removable:
        labels = _labels_of(g, comp)
        records.append(RuleRecord(1, witness=labels, removed=labels, added=(), added_edges=()))
        doomed.update(comp)
    g2 = _remove(g, doomed)
    return RuleOutcome(True, Instance(g2, inst.k, inst.mode), tuple(records))


def truncate_oversized_cliques(inst: Instance) -> RuleOutcome:
    """Rule 2: shrink every critical clique larger than k+1 down to k+1
    vertices (the smallest ids survive)."""
    g, k = inst.graph, inst.k
    records = []
    doomed = set()
    for members in critical_cliques(g).classes:
        if len(members) > k + 1:
            cut = members[k + 1 :]
            doomed.update(cut)
            records.append(
                RuleRecord(2, witness=_labels_of(g, members), removed=_labels_of(g, cut),
                           added=(), added_edges=())
            )
    if not records:
        return RuleOutcome(False, inst)
    g2 = _remove(g, doomed)
    return RuleOutcome(True, Instance(g2, inst.k, inst.mode), tuple(records))


def collapse_dangling_branch(inst: Instance) -> RuleOutcome:
    """Rule 3: replace the interior of a 1-branch by one pendant clique of
    size min(|N_B(P)|, k+1) joined to the attachment clique P."""
    g, k = inst.graph, inst.k
    ccg = critical_clique_graph(g)
    for b in find_1_branches(g, ccg):
        core = branch_core_vertices(ccg, b)
        if not core:
            continue
        p = b.attachments[0]
        size = min(len(inner_neighborhood(ccg, b, p)), k + 1)
        core_nodes = [x for x in b.nodes if x != p]
        if len(core_nodes) == 1 and len(ccg.classes[core_nodes[0]]) == size:
            continue  # already a single pendant clique of the target size
        p_labels = _labels_of(g, ccg.classes[p])
        witness = _labels_of(g, branch_vertices(ccg, b))
        removed = _labels_of(g, core)
        g1 = _remove(g, core)
        new_labels = _fresh_labels(g1, 3, size)
        g2 = _append_clique(g1, new_labels)
        g2 = _join_labels(g2, new_labels, p_labels)
        rec = RuleRecord(
            3,
            witness=witness,
            removed=removed,
            added=tuple(new_labels),
            added_edges=_clique_pairs(new_labels) + _cross_pairs(new_labels, p_labels),
        )
        return RuleOutcome(True, Instance(g2, k, inst.mode), (rec,))
    return RuleOutcome(False, inst)


def merge_sibling_branches(inst: Instance) -> RuleOutcome:
    """Rule 4: when several 1-branches hang by a join on the same outside
    neighborhood N and their attachment cliques total more than 2k+1
    vertices, replace them all by two (k+1)-cliques joined exactly to N."""
    g, k = inst.graph, inst.k
    ccg = critical_clique_graph(g)
    groups = {}
    for b in find_1_branches(g, ccg):
        n_out = outside_neighborhood(g, ccg, b, b.attachments[0])
        groups.setdefault(n_out, []).append(b)
    for key in sorted(groups, key=lambda s: tuple(sorted(s))):
        bundle = groups[key]
        if len(bundle) < 2:
            continue
        atts = [b.attachments[0] for b in bundle]
        if any(ccg.graph.has_edge(a, b2) for a, b2 in itertools.combinations(atts, 2)):
            continue  # adjacent attachment cliques fall outside this rule
        if sum(len(ccg.classes[a]) for a in atts) <= 2 * k + 1:
            continue
        if (
            len(bundle) == 2
            and all(len(b.nodes) == 1 for b in bundle)
            and all(len(ccg.classes[a]) == k + 1 for a in atts)
        ):
            continue  # already two bare (k+1)-cliques on N
        doomed = set()
        for b in bundle:
            doomed.update(branch_vertices(ccg, b))
        n_labels = _labels_of(g, key)
        witness = _labels_of(g, doomed)
        removed = witness
        g1 = _remove(g, doomed)
        new_labels = _fresh_labels(g1, 4, 2 * (k + 1))
        first, second = new_labels[: k + 1], new_labels[k + 1 :]
        g2 = _append_clique(g1, first)
        g2 = _append_clique(g2, second)
        g2 = _join_labels(g2, first, n_labels)
        g2 = _join_labels(g2, second, n_labels)
        rec = RuleRecord(
            4,
            witness=witness,
            removed=removed,
            added=tuple(new_labels),
            added_edges=_clique_pairs(first)
            + _clique_pairs(second)
            + _cross_pairs(first, n_labels)
            + _cross_pairs(second, n_labels),
        )
        return RuleOutcome(True, Instance(g2, k, inst.mode), (rec,))
    return RuleOutcome(False, inst)


def _corridor_factor(branch):
    sizes = branch.main_sizes
    i = branch.mincut_index
    return sizes[i], sizes[i + 1]


def collapse_long_corridor(inst: Instance) -> RuleOutcome:
    """Rule 5 (edition and deletion): a clean 2-branch whose main path has at
    least 8 critical cliques keeps only P1, Q1, P2, Q2; fresh cliques K1, K2
    of size k+1 hang on Q1, Q2 and are linked through K'1, K'2 whose size
    product realizes the path's min-cut (as the consecutive pair attaining
    it)."""
    g, k = inst.graph, inst.k
    ccg = critical_clique_graph(g)
    for b in find_clean_2_branches(g, ccg):
        if b.q < 8:
            continue
        f1, f2 = _corridor_factor(b)
        path = b.main_path
        keep_classes = {path[0], b.q1, b.q2, path[-1]}
        kept = set()
        for node in keep_classes:
            kept.update(ccg.classes[node])
        doomed = branch_vertices(ccg, b) - kept
        if len(b.nodes) == 8 and len(doomed) <= 2 * (k + 1) + f1 + f2:
            # a bare 8-clique corridor whose interior is no bigger than the
            # gadget: replacing it cannot shrink anything (on quotient
            # cycles it would just rotate an isomorphic window forever)
            continue
        q1_labels = _labels_of(g, ccg.classes[b.q1])
        q2_labels = _labels_of(g, ccg.classes[b.q2])
        witness = _labels_of(g, branch_vertices(ccg, b))
        removed = _labels_of(g, doomed)
        g1 = _remove(g, doomed)
        new_labels = _fresh_labels(g1, 5, 2 * (k + 1) + f1 + f2)
        k1 = new_labels[: k + 1]
        k2 = new_labels[k + 1 : 2 * (k + 1)]
        f1_lab = new_labels[2 * (k + 1) : 2 * (k + 1) + f1]
        f2_lab = new_labels[2 * (k + 1) + f1 :]
        g2 = g1
        for clique in (k1, k2, f1_lab, f2_lab):
            g2 = _append_clique(g2, clique)
        joins = [
            (k1, q1_labels),
            (k2, q2_labels),
            (f1_lab, k1),
            (f2_lab, k2),
            (f1_lab, f2_lab),
        ]
        added_edges = []
        for clique in (k1, k2, f1_lab, f2_lab):
            added_edges.extend(_clique_pairs(clique))
        for left, right in joins:
            g2 = _join_labels(g2, left, right)
            added_edges.extend(_cross_pairs(left, right))
        rec = RuleRecord(
            5,
            witness=witness,
            removed=removed,
            added=tuple(new_labels),
            added_edges=tuple(added_edges),
        )
        return RuleOutcome(True, Instance(g2, k, inst.mode), (rec,))
    return RuleOutcome(False, inst)


def enforce_corridor_completion(inst: Instance) -> RuleOutcome:
    """Rule 6 (completion): a clean 2-branch whose main path has at least k+3
    critical cliques either certifies a no-instance (when its attachment
    points stay connected outside the branch interior, the underlying cycle
    needs more than k chords) or collapses to P1, Q1, Q2, P2 with Q1 and Q2
    fully joined."""
    g, k = inst.graph, inst.k
    ccg = critical_clique_graph(g)
    for b in find_clean_2_branches(g, ccg):
        if b.q < k + 3:
            continue
        path = b.main_path
        core = branch_core_vertices(ccg, b)  # branch minus the attachment cliques
        witness = _labels_of(g, branch_vertices(ccg, b))
        remainder = [v for v in range(g.n) if v not in core]
        gx = induced_subgraph(g, remainder)
        pos = {v: i for i, v in enumerate(remainder)}
        p1_rep = pos[ccg.classes[path[0]][0]]
        p2_rep = pos[ccg.classes[path[-1]][0]]
        same = any(
            p1_rep in comp and p2_rep in comp for comp in connected_components(gx)
        )
        if same:
            rec = RuleRecord(6, witness=witness, removed=(), added=(), added_edges=())
            return RuleOutcome(True, inst, (rec,), no_instance=True)
        keep_classes = {path[0], b.q1, b.q2, path[-1]}
        kept = set()
        for node in keep_classes:
            kept.update(ccg.classes[node])
        doomed = branch_vertices(ccg, b) - kept
        q1 = ccg.classes[b.q1]
        q2 = ccg.classes[b.q2]
        missing = [
            (g.label(a), g.label(c))
            for a in q1
            for c in q2
            if a != c and not g.has_edge(a, c)
        ]
        if not doomed and not missing:
            continue  # collapse would change nothing
        removed = _labels_of(g, doomed)
        g2 = _remove(g, doomed)
        for la, lb in missing:
            g2 = _join_labels(g2, (la,), (lb,))
        rec = RuleRecord(
            6,
            witness=witness,
            removed=removed,
            added=(),
            added_edges=tuple(missing),
        )
        return RuleOutcome(True, Instance(g2, k, inst.mode), (rec,))
    return RuleOutcome(False, inst)


_RULES = {
    1: drop_leaf_power_components,
    2: truncate_oversized_cliques,
    3: collapse_dangling_branch,
    4: merge_sibling_branches,
    5: collapse_long_corridor,
    6: enforce_corridor_completion,
}


def apply_rule(inst: Instance, rule: int) -> RuleOutcome:
    """Apply one rule once (rules 1 and 2 sweep all their witnesses)."""
    if rule not in _RULES:
        raise ValueError(f"unknown rule {rule}")
    return _RULES[rule](ensure_labels(inst))


def kernelize(inst: Instance) -> KernelReport:
    """Run the mode's rules to a fixpoint; returns the reduced instance, the
    rule trace, and size statistics with the cubic bound check."""
    inst = ensure_labels(inst)
    before_n = inst.graph.n
    before_c = len(critical_cliques(inst.graph).classes)
    records = []
    rules = RULESETS[inst.mode]
    no_instance = False
    applications = 0
    changed = True
    while changed and not no_instance:
        changed = False
        for rule in rules:
            while True:
                out = _RULES[rule](inst)
                if out.no_instance:
                    records.extend(out.records)
                    no_instance = True
                    break
                if not out.applied:
                    break
                records.extend(out.records)
                inst = out.instance
                changed = True
                applications += 1
                if applications > _MAX_APPLICATIONS:
                    raise RuntimeError("kernelization failed to reach a fixpoint")
                if rule in (1, 2):
                    break  # these already swept every witness
            if no_instance:
                break
    after_n = inst.graph.n
    after_c = len(critical_cliques(inst.graph).classes)
    vb = vertex_bound(inst.mode, inst.k)
    cb = clique_bound(inst.mode, inst.k)
    stats = KernelStats(
        mode=inst.mode,
        k=inst.k,
        vertices_before=before_n,
        vertices_after=after_n,
        cliques_before=before_c,
        cliques_after=after_c,
        vertex_bound=vb,
        clique_bound=cb,
        within_vertex_bound=after_n <= vb,
        within_clique_bound=after_c <= cb,
    )
    verdict = "no_instance" if no_instance else "reduced"
    return KernelReport(verdict=verdict, instance=inst, trace=tuple(records), stats=stats)


# -- trace replay and formatting -----------------------------------------------

def replay_trace(g: Graph, trace) -> Graph:
    """Re-apply a trace to the input graph; must reproduce the reduced graph."""
    if g.labels is None:
        g = g.relabeled([str(v) for v in range(g.n)])
    for rec in trace:
        if rec.removed:
            idx = {lb: v for v, lb in enumerate(g.labels)}
            doomed = {idx[lb] for lb in rec.removed}
            g = _remove(g, doomed)
        if rec.added:
            bits = list(g.adj_bits) + [0] * len(rec.added)
            g = Graph._from_bits(
                g.n + len(rec.added), bits, tuple(g.label_list() + list(rec.added))
            )
        if rec.added_edges:
            idx = {lb: v for v, lb in enumerate(g.labels)}
            bits = list(g.adj_bits)
            for la, lb in rec.added_edges:
                a, b = idx[la], idx[lb]
                bits[a] |= 1 << b
                bits[b] |= 1 << a
            g = Graph._from_bits(g.n, bits, g.labels)
    return g


def format_trace(trace) -> str:
    """One tab-separated line per application: rule, witness, removed, added."""
    lines = []
    for rec in trace:
        lines.append(
            "\t".join(
                [
                    str(rec.rule),
                    ",".join(rec.witness),
                    ",".join(rec.removed),
                    ",".join(rec.added),
                ]
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")
