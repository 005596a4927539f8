"""Verification suites: oracle agreement for recognition, the twin-class
growth bound, rule safeness by brute-force equivalence, kernel size bounds,
solver cross-validation, end-to-end pipelines, and no-instance detection.

Every suite is seeded and deterministic; failures carry the serialized
instance so they can be replayed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .cliques import critical_cliques
from .generators import gen_random_3lp, gen_random_gnp, perturb
from .graph import EditSet, Graph, apply_edits, format_edge_list, parse_edge_list
from .kernel import Instance, apply_rule, kernelize
from .recognition import leaf_root_is_valid, obstruction_is_valid, recognize
from .solver import branch_solve, brute_force_opt, solve_with_kernel


@dataclass
class VerificationReport:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, failure: dict | None = None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if failure is not None:
                self.failures.append(failure)

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return f"{self.name}: {self.passed} passed, {self.failed} failed [{status}]"


def _trial_seed(seed: int, salt: int, i: int) -> int:
    return seed * 1_000_003 + salt * 99_991 + i * 7_919


# -- independent obstruction oracle ---------------------------------------------

# Each of bull, dart and gem is the unique 5-vertex graph with its
# (edge count, sorted degree sequence) pair, so subset classification by
# signature is an exact test that shares nothing with the pattern matcher.
_SIGNATURES = {
    (5, (1, 1, 2, 3, 3)),
    (6, (1, 2, 2, 3, 4)),
    (7, (2, 2, 3, 3, 4)),
}

_SUBSET_CACHE = {}


def _subsets_for(n: int):
    if n not in _SUBSET_CACHE:
        fives = list(itertools.combinations(range(n), 5)) if n >= 5 else []
        cycles = []
        for size in range(4, n + 1):
            for sub in itertools.combinations(range(n), size):
                mask = 0
                for v in sub:
                    mask |= 1 << v
                cycles.append((sub, mask))
        _SUBSET_CACHE[n] = (fives, cycles)
    return _SUBSET_CACHE[n]


def has_forbidden_subgraph(g: Graph) -> bool:
    """Brute-force obstruction presence, independent of the recognizer."""
    bits = g.adj_bits
    fives, cycles = _subsets_for(g.n)
    for combo in fives:
        mask = 0
        for v in combo:
            mask |= 1 << v
        degs = []
        total = 0
        for v in combo:
            d = (bits[v] & mask).bit_count()
            degs.append(d)
            total += d
        if (total // 2, tuple(sorted(degs))) in _SIGNATURES:
            return True
    for sub, mask in cycles:
        if any((bits[v] & mask).bit_count() != 2 for v in sub):
            continue
        # 2-regular; a chordless cycle needs it connected too
        seen = 1 << sub[0]
        stack = [sub[0]]
        count = 1
        while stack:
            v = stack.pop()
            row = bits[v] & mask & ~seen
            while row:
                low = row & -row
                u = low.bit_length() - 1
                seen |= low
                row ^= low
                count += 1
                stack.append(u)
        if count == len(sub):
            return True
    return False


def _graph_from_mask(n: int, pairs, mask: int) -> Graph:
    bits = [0] * n
    idx = 0
    while mask:
        if mask & 1:
            u, v = pairs[idx]
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        mask >>= 1
        idx += 1
    return Graph._from_bits(n, bits)


def _check_recognition(g: Graph, certificates: bool):
    res = recognize(g)
    oracle_clean = not has_forbidden_subgraph(g)
    if res.accepted != oracle_clean:
        return False, "verdict disagrees with brute-force obstruction scan"
    if certificates:
        if res.accepted:
            if not leaf_root_is_valid(g, res.leaf_root):
                return False, "leaf root fails the distance-3 property"
        else:
            if res.obstruction is None or not obstruction_is_valid(g, res.obstruction):
                return False, "obstruction does not induce its pattern"
    return True, ""


def verify_recognition_agreement(
    random_trials: int = 1000,
    max_random_n: int = 12,
    exhaustive_max_n: int = 0,
    seed: int = 0,
    certificates: bool = True,
) -> VerificationReport:
    """Quotient-forest recognition against the brute obstruction oracle,
    exhaustively on all labeled graphs up to `exhaustive_max_n` vertices and
    on seeded random graphs up to `max_random_n`."""
    rep = VerificationReport("recognition_agreement")
    for n in range(1, exhaustive_max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = _graph_from_mask(n, pairs, mask)
            ok, why = _check_recognition(g, certificates)
            rep.record(
                ok,
                None
                if ok
                else {
                    "property": "recognition_agreement",
                    "certificates": certificates,
                    "graph": format_edge_list(g),
                    "detail": why,
                },
            )
    for i in range(random_trials):
        rng = random.Random(_trial_seed(seed, 11, i))
        n = rng.randint(1, max_random_n)
        g = gen_random_gnp(n, rng.uniform(0.05, 0.95), rng.randrange(2**32))
        ok, why = _check_recognition(g, certificates)
        rep.record(
            ok,
            None
            if ok
            else {
                "property": "recognition_agreement",
                "certificates": certificates,
                "graph": format_edge_list(g),
                "detail": why,
            },
        )
    rep.info["graphs_checked"] = rep.passed + rep.failed
    return rep


def verify_twin_class_growth(
    trials: int = 1000, max_n: int = 12, seed: int = 0
) -> VerificationReport:
    """Flipping one pair adds at most 4 critical cliques."""
    rep = VerificationReport("twin_class_growth")
    for i in range(trials):
        rng = random.Random(_trial_seed(seed, 13, i))
        n = rng.randint(2, max_n)
        g = gen_random_gnp(n, rng.uniform(0.05, 0.95), rng.randrange(2**32))
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        pair = (u, v) if u < v else (v, u)
        before = len(critical_cliques(g).classes)
        flipped = apply_edits(g, EditSet(frozenset([pair]), "edition"))
        after = len(critical_cliques(flipped).classes)
        ok = after <= before + 4
        rep.record(
            ok,
            None
            if ok
            else {
                "property": "twin_class_growth",
                "graph": format_edge_list(g),
                "pair": list(pair),
            },
        )
    return rep


# -- instances on which a given rule applies ------------------------------------

def _union(*edge_graph_pairs):
    """Disjoint union: list of (n, edges) blocks -> (n, edges) with offsets."""
    total = 0
    edges = []
    for n, es in edge_graph_pairs:
        edges.extend((u + total, v + total) for u, v in es)
        total += n
    return total, edges


def _clique_edges(vertices):
    return list(itertools.combinations(vertices, 2))


def _join_edges(left, right):
    return [(a, b) for a in left for b in right]


def _instance_rule1(rng, k, max_n):
    n1 = rng.randint(2, 4)
    g1 = gen_random_3lp(n1, rng.randrange(2**32))
    n2 = rng.randint(3, max_n - n1)
    g2 = gen_random_gnp(n2, rng.uniform(0.3, 0.8), rng.randrange(2**32))
    n, edges = _union((g1.n, g1.edges()), (g2.n, g2.edges()))
    return Graph(n, edges)


def _instance_rule2(rng, k, max_n):
    base = gen_random_gnp(rng.randint(2, 4), 0.5, rng.randrange(2**32))
    s = k + 2 + rng.randint(0, 1)
    if base.n + s - 1 > max_n:
        s = k + 2
    if base.n + s - 1 > max_n:
        return None
    n = base.n + s - 1
    edges = base.edges()
    twins = list(range(base.n, n))
    nbrs = base.neighbors(0)
    for t in twins:
        edges.extend((min(t, x), max(t, x)) for x in nbrs)
        edges.append((0, t))
    edges.extend(_clique_edges(twins))
    return Graph(n, edges)


def _instance_rule3(rng, k, max_n):
    # a cyclic core (so branches exist) with a tree of small cliques hanging off
    core_n = 4
    core_edges = [(0, 1), (1, 2), (2, 3), (0, 3)]  # C4
    if rng.random() < 0.5:
        core_edges = gen_random_gnp(core_n, 0.7, rng.randrange(2**32)).edges()
    b = rng.randint(2, 4)
    sizes = [1] * b
    if rng.random() < 0.4:
        sizes[rng.randrange(b)] = 2
    if core_n + sum(sizes) > max_n:
        sizes = [1] * b
    if core_n + sum(sizes) > max_n:
        return None
    tree = _random_tree_edges(b, rng)
    blocks = []
    start = core_n
    for s in sizes:
        blocks.append(list(range(start, start + s)))
        start += s
    edges = list(core_edges)
    for block in blocks:
        edges.extend(_clique_edges(block))
    for a, c in tree:
        edges.extend(_join_edges(blocks[a], blocks[c]))
    anchor = rng.sample(range(core_n), rng.randint(1, 2))
    edges.extend(_join_edges(blocks[0], anchor))
    return Graph(start, edges)


def _random_tree_edges(t, rng):
    edges = []
    for v in range(1, t):
        edges.append((rng.randrange(v), v))
    return edges


def _instance_rule4(rng, k, max_n):
    # sibling cliques hanging by a join on two non-adjacent vertices {a, b}
    shapes = []
    if 2 * (k + 1) + 1 + 2 <= max_n:
        shapes.append("two_with_pendant")
    if (k + 1) + k + 1 + 2 <= max_n:
        shapes.append("three")
    if not shapes:
        return None
    shape = rng.choice(shapes)
    if shape == "two_with_pendant":
        sizes = [k + 1, k + 1]
        pendant = True
    else:
        sizes = [k + 1, max(1, k), 1]
        pendant = False
    used = 2 + sum(sizes) + (1 if pendant else 0)
    edges = []
    a, b = 0, 1
    blocks = []
    start = 2
    for s in sizes:
        block = list(range(start, start + s))
        blocks.append(block)
        start += s
        edges.extend(_clique_edges(block))
        edges.extend(_join_edges(block, [a, b]))
    if pendant:
        edges.extend(_join_edges([start], blocks[0]))
        start += 1
        used = start
    if used < max_n and rng.random() < 0.5:
        edges.append((a, start))  # extra context on one side of N
        start += 1
    return Graph(start, edges)


def _instance_rule5(rng, k, max_n):
    q = rng.choice([8, 9]) if max_n >= 11 else 8
    variant = rng.choice(["two_ends", "two_ends_linked", "shared_end"])
    edges = [(i, i + 1) for i in range(q - 1)]
    if variant == "shared_end":
        z = q
        n = q + 1
        edges += [(0, z), (q - 1, z)]
    else:
        x, y = q, q + 1
        n = q + 2
        edges += [(0, x), (q - 1, y)]
        if variant == "two_ends_linked":
            edges.append((x, y))
    if n > max_n:
        return None
    if n < max_n and rng.random() < 0.3:
        edges.append((rng.randrange(1, q - 1), n))  # one pendant decoration
        n += 1
    return Graph(n, edges)


def _instance_rule6(rng, k, max_n, force_no=None):
    q = k + 3 + rng.randint(0, 1)
    same_side = force_no if force_no is not None else rng.random() < 0.5
    edges = [(i, i + 1) for i in range(q - 1)]
    n = q
    if same_side:
        hops = rng.randint(1, 2)
        if q + hops > max_n:
            hops = 1
        if q + hops > max_n:
            return None
        prev = 0
        for _ in range(hops):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, q - 1))
    else:
        if q + 2 > max_n:
            return None
        edges += [(0, n), (q - 1, n + 1)]
        n += 2
        if n + 4 <= max_n and rng.random() < 0.5:
            c = n
            edges += [(c, c + 1), (c + 1, c + 2), (c + 2, c + 3), (c, c + 3), (n - 2, c)]
            n += 4
    return Graph(n, edges)


_BUILDERS = {
    1: _instance_rule1,
    2: _instance_rule2,
    3: _instance_rule3,
    4: _instance_rule4,
    5: _instance_rule5,
    6: _instance_rule6,
}


def _rule_instance(rule, rng, max_n, max_k):
    k = rng.randint(0, max_k)
    built = _BUILDERS[rule](rng, k, max_n)
    return built, k


def verify_rule_safeness(
    rule: int,
    mode: str,
    trials: int = 200,
    max_n: int = 10,
    max_k: int = 3,
    seed: int = 0,
) -> VerificationReport:
    """Generate seeded instances on which `rule` applies and assert yes/no
    equivalence at the instance budget between the original and the reduced
    graph, both sides decided by the brute-force oracle. A no-instance
    verdict from rule 6 is checked as an actual brute-force no."""
    rep = VerificationReport(f"rule{rule}_{mode}_safeness")
    attempts = 0
    found = 0
    i = 0
    while found < trials:
        i += 1
        attempts += 1
        if attempts > trials * 500:
            raise RuntimeError(f"could not generate {trials} applicable instances for rule {rule}")
        rng = random.Random(_trial_seed(seed, 17 + rule, i))
        built, k = _rule_instance(rule, rng, max_n, max_k)
        if built is None:
            continue
        inst = Instance(built, k, mode)
        out = apply_rule(inst, rule)
        if out.no_instance:
            found += 1
            feasible = brute_force_opt(inst.graph, mode, inst.k).feasible
            rep.record(
                not feasible,
                None
                if not feasible
                else {
                    "property": "rule_safeness",
                    "rule": rule,
                    "mode": mode,
                    "k": inst.k,
                    "graph": format_edge_list(inst.graph),
                    "detail": "rule declared no-instance but a solution exists",
                },
            )
            continue
        if not out.applied:
            continue
        found += 1
        before = brute_force_opt(inst.graph, mode, inst.k).feasible
        after = brute_force_opt(out.instance.graph, mode, inst.k).feasible
        ok = before == after
        rep.record(
            ok,
            None
            if ok
            else {
                "property": "rule_safeness",
                "rule": rule,
                "mode": mode,
                "k": inst.k,
                "graph": format_edge_list(inst.graph),
                "detail": f"before={before} after={after}",
            },
        )
    rep.info["attempts"] = attempts
    return rep


def verify_solver_agreement(
    trials: int = 500, max_n: int = 9, max_k: int = 3, seed: int = 0
) -> VerificationReport:
    """branch_solve against brute_force_opt on verdict and optimum size."""
    rep = VerificationReport("solver_agreement")
    modes = ("edition", "completion", "deletion")
    for i in range(trials):
        rng = random.Random(_trial_seed(seed, 29, i))
        mode = modes[i % 3]
        n = rng.randint(4, max_n)
        g = gen_random_gnp(n, rng.uniform(0.15, 0.85), rng.randrange(2**32))
        k = rng.randint(0, max_k)
        slow = brute_force_opt(g, mode, k)
        fast = branch_solve(g, mode, k)
        ok = slow.feasible == fast.feasible and slow.size == fast.size
        rep.record(
            ok,
            None
            if ok
            else {
                "property": "solver_agreement",
                "mode": mode,
                "k": k,
                "graph": format_edge_list(g),
                "detail": f"brute={slow.feasible}/{slow.size} branch={fast.feasible}/{fast.size}",
            },
        )
    return rep


def _perturbed_instance(rng, mode: str, n: int, r: int) -> Graph:
    """A 3-leaf power with r mode-undoable flips; resamples the rare base
    (a complete graph) that leaves no legal pair to flip."""
    for _ in range(50):
        base = gen_random_3lp(n, rng.randrange(2**32))
        try:
            g, _ = perturb(base, r, mode, rng.randrange(2**32))
            return g
        except ValueError:
            continue
    raise RuntimeError(f"no perturbable 3-leaf power on {n} vertices found")


def verify_bounds(mode: str, trials: int = 50, seed: int = 0, max_n: int = 40, max_r: int = 3) -> VerificationReport:
    """Kernel size bounds on perturbed 3-leaf powers (yes-instances)."""
    rep = VerificationReport(f"bounds_{mode}")
    for i in range(trials):
        rng = random.Random(_trial_seed(seed, 31, i))
        n = rng.randint(10, max_n)
        r = rng.randint(0, max_r)
        g = _perturbed_instance(rng, mode, n, r)
        report = kernelize(Instance(g, r, mode))
        ok = (
            report.verdict == "reduced"
            and report.stats.within_vertex_bound
            and report.stats.within_clique_bound
        )
        rep.record(
            ok,
            None
            if ok
            else {
                "property": "bounds",
                "mode": mode,
                "k": r,
                "graph": format_edge_list(g),
                "detail": str(report.stats),
            },
        )
    return rep


def verify_end_to_end(
    trials: int = 200,
    seed: int = 0,
    max_n: int = 40,
    max_r: int = 3,
    direct_max_n: int = 12,
) -> VerificationReport:
    """Perturbed 3-leaf powers solve to yes at the certified budget through
    the kernel; small instances must agree with the direct solver."""
    rep = VerificationReport("end_to_end")
    modes = ("edition", "completion", "deletion")
    for i in range(trials):
        rng = random.Random(_trial_seed(seed, 37, i))
        mode = modes[i % 3]
        n = rng.randint(8, max_n)
        r = rng.randint(0, max_r)
        g = _perturbed_instance(rng, mode, n, r)
        inst = Instance(g, r, mode)
        sol = solve_with_kernel(inst)
        ok = sol.feasible
        detail = "kernel+solve says no on a certified yes-instance"
        if ok and g.n <= direct_max_n:
            direct = branch_solve(g, mode, r)
            ok = direct.feasible == sol.feasible
            detail = "kernelized verdict disagrees with direct solve"
        rep.record(
            ok,
            None
            if ok
            else {
                "property": "end_to_end",
                "mode": mode,
                "k": r,
                "graph": format_edge_list(g),
                "detail": detail,
            },
        )
    return rep


def verify_no_instance_detection(
    trials: int = 50, seed: int = 0, confirm_max_n: int = 12
) -> VerificationReport:
    """Quotient cycles of at least k+4 cliques with a qualifying clean
    2-branch must come back as no-instances, confirmed by brute force."""
    rep = VerificationReport("no_instance_detection")
    for i in range(trials):
        rng = random.Random(_trial_seed(seed, 41, i))
        k = rng.randint(0, 3)
        built = _instance_rule6(rng, k, 12, force_no=True)
        if built is None:
            continue
        inst = Instance(built, k, "completion")
        report = kernelize(inst)
        ok = report.verdict == "no_instance"
        detail = "kernelizer did not detect the no-instance"
        if ok and inst.graph.n <= confirm_max_n:
            feasible = brute_force_opt(inst.graph, "completion", k).feasible
            ok = not feasible
            detail = "brute force found a completion on a declared no-instance"
        rep.record(
            ok,
            None
            if ok
            else {
                "property": "no_instance",
                "mode": "completion",
                "k": k,
                "graph": format_edge_list(inst.graph),
                "detail": detail,
            },
        )
    rep.info["trials"] = trials
    return rep


def replay_failure(failure: dict) -> bool:
    """Re-run the property a failure record captured; True means it holds now."""
    prop = failure["property"]
    g = parse_edge_list(failure["graph"])
    if prop == "recognition_agreement":
        ok, _ = _check_recognition(g, failure.get("certificates", True))
        return ok
    if prop == "twin_class_growth":
        pair = tuple(failure["pair"])
        before = len(critical_cliques(g).classes)
        after = len(
            critical_cliques(apply_edits(g, EditSet(frozenset([pair]), "edition"))).classes
        )
        return after <= before + 4
    if prop == "rule_safeness":
        inst = Instance(g, failure["k"], failure["mode"])
        out = apply_rule(inst, failure["rule"])
        if out.no_instance:
            return not brute_force_opt(g, failure["mode"], failure["k"]).feasible
        if not out.applied:
            return True
        before = brute_force_opt(g, failure["mode"], failure["k"]).feasible
        after = brute_force_opt(out.instance.graph, failure["mode"], failure["k"]).feasible
        return before == after
    if prop == "solver_agreement":
        slow = brute_force_opt(g, failure["mode"], failure["k"])
        fast = branch_solve(g, failure["mode"], failure["k"])
        return slow.feasible == fast.feasible and slow.size == fast.size
    if prop == "bounds":
        report = kernelize(Instance(g, failure["k"], failure["mode"]))
        return (
            report.verdict == "reduced"
            and report.stats.within_vertex_bound
            and report.stats.within_clique_bound
        )
    if prop == "end_to_end":
        sol = solve_with_kernel(Instance(g, failure["k"], failure["mode"]))
        return sol.feasible
    if prop == "no_instance":
        report = kernelize(Instance(g, failure["k"], "completion"))
        if report.verdict != "no_instance":
            return False
        return not brute_force_opt(g, "completion", failure["k"]).feasible
    raise ValueError(f"unknown failure property {prop!r}")
