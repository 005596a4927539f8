"""Command-line interface.

Subcommands: recognize, ccgraph, kernelize, solve, generate, verify. Graphs
travel in the shared edge-list text format ("n m" header, then "u v" lines);
-i/-o default to stdin/stdout. Identical inputs and seeds give byte-identical
outputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cliques import critical_clique_graph
from .generators import GeneratorSpec, build
from .graph import GraphFormatError, format_edge_list, parse_edge_list
from .kernel import Instance, format_trace, kernelize
from .recognition import recognize
from .solver import branch_solve, solve_with_kernel
from . import verify as verify_mod

EXIT_NO_INSTANCE = 20
EXIT_IO = 1


def _read_graph(path: str):
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _write_text(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _jdump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_recognize(args) -> int:
    g = _read_graph(args.input)
    res = recognize(g)
    if args.json:
        payload = {"is_3_leaf_power": res.accepted, "n": g.n, "m": g.m}
        if res.accepted and args.certificate:
            t = res.leaf_root.tree
            payload["leaf_root"] = {
                "tree_nodes": t.n,
                "tree_edges": t.edges(),
                "leaf_of": {str(v): node for v, node in sorted(res.leaf_root.leaf_map.items())},
            }
        if not res.accepted and args.certificate:
            payload["obstruction"] = {
                "kind": res.obstruction.kind,
                "vertices": list(res.obstruction.vertices),
            }
        _write_text(args.output, _jdump(payload))
    else:
        lines = ["yes" if res.accepted else "no"]
        if args.certificate and res.accepted:
            lines.extend(_leaf_root_lines(res.leaf_root))
        if args.certificate and not res.accepted:
            obs = res.obstruction
            lines.append("obstruction " + obs.kind + " " + " ".join(map(str, obs.vertices)))
        _write_text(args.output, "\n".join(lines) + "\n")
    return 0 if res.accepted else 1


def _leaf_root_lines(root):
    """Parent-array text: 'node <id> <parent>' rows (root -1), then the leaf map."""
    t = root.tree
    parent = {0: -1} if t.n else {}
    order = [0] if t.n else []
    queue = [0] if t.n else []
    while queue:
        v = queue.pop(0)
        for u in t.neighbors(v):
            if u not in parent:
                parent[u] = v
                order.append(u)
                queue.append(u)
    lines = [f"tree {t.n}"]
    lines.extend(f"node {v} {parent[v]}" for v in sorted(parent))
    lines.extend(f"leaf {v} {node}" for v, node in sorted(root.leaf_map.items()))
    return lines


def cmd_ccgraph(args) -> int:
    g = _read_graph(args.input)
    ccg = critical_clique_graph(g)
    if args.json:
        payload = {
            "quotient": {"n": ccg.graph.n, "m": ccg.graph.m, "edges": ccg.graph.edges()},
            "classes": [list(c) for c in ccg.classes],
            "is_forest": ccg.is_forest,
        }
        _write_text(args.output, _jdump(payload))
        return 0
    out = [format_edge_list(ccg.graph).rstrip("\n")]
    for i, members in enumerate(ccg.classes):
        out.append(f"# class {i}: " + " ".join(map(str, members)))
    _write_text(args.output, "\n".join(out) + "\n")
    return 0


_MODE_NAMES = {"edit": "edition", "complete": "completion", "delete": "deletion"}


def cmd_kernelize(args) -> int:
    g = _read_graph(args.input)
    inst = Instance(g, args.k, _MODE_NAMES[args.mode])
    report = kernelize(inst)
    if args.trace:
        _write_text(args.trace, format_trace(report.trace))
    if args.stats:
        s = report.stats
        sys.stderr.write(
            f"verdict={report.verdict} vertices={s.vertices_before}->{s.vertices_after} "
            f"cliques={s.cliques_before}->{s.cliques_after} "
            f"vertex_bound={s.vertex_bound} clique_bound={s.clique_bound}\n"
        )
    if report.verdict == "no_instance":
        sys.stderr.write("no completion within budget\n")
        return EXIT_NO_INSTANCE
    _write_text(args.output, format_edge_list(report.instance.graph))
    return 0


def cmd_solve(args) -> int:
    g = _read_graph(args.input)
    mode = _MODE_NAMES[args.mode]
    inst = Instance(g, args.k, mode)
    sol = branch_solve(g, mode, args.k) if args.no_kernel else solve_with_kernel(inst)
    if args.json:
        payload = {"feasible": sol.feasible, "size": sol.size}
        if sol.feasible and sol.edits is not None:
            payload["edits"] = [list(p) for p in sol.edits.sorted_pairs()]
        _write_text(args.output, _jdump(payload))
    else:
        if sol.feasible:
            _write_text(args.output, f"yes {sol.size}\n")
        else:
            _write_text(args.output, "no\n")
    if sol.feasible and args.emit_edits:
        lines = "".join(f"{u} {v}\n" for u, v in sol.edits.sorted_pairs())
        _write_text(args.emit_edits, lines)
    return 0 if sol.feasible else 1


def cmd_generate(args) -> int:
    spec = GeneratorSpec(
        kind=args.kind,
        n=args.n,
        p=args.p,
        r=args.r,
        mode=_MODE_NAMES[args.mode],
        seed=args.seed,
    )
    g = build(spec)
    _write_text(args.output, format_edge_list(g))
    return 0


_SUITES = ("recognition", "twins", "rules", "bounds", "solver", "endtoend", "noinstance")


def _run_suite(name: str, trials: int, seed: int):
    if name == "recognition":
        return [verify_mod.verify_recognition_agreement(random_trials=trials, seed=seed)]
    if name == "twins":
        return [verify_mod.verify_twin_class_growth(trials=trials, seed=seed)]
    if name == "rules":
        combos = [(1, "edition"), (2, "edition"), (3, "edition"), (4, "edition"),
                  (5, "edition"), (5, "deletion"), (6, "completion")]
        return [
            verify_mod.verify_rule_safeness(rule, mode, trials=trials, seed=seed)
            for rule, mode in combos
        ]
    if name == "bounds":
        return [verify_mod.verify_bounds(mode, trials=trials, seed=seed)
                for mode in ("edition", "completion", "deletion")]
    if name == "solver":
        return [verify_mod.verify_solver_agreement(trials=trials, seed=seed)]
    if name == "endtoend":
        return [verify_mod.verify_end_to_end(trials=trials, seed=seed)]
    if name == "noinstance":
        return [verify_mod.verify_no_instance_detection(trials=trials, seed=seed)]
    raise ValueError(name)


def cmd_verify(args) -> int:
    suites = _SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for name in suites:
        reports.extend(_run_suite(name, args.trials, args.seed))
    if args.json:
        payload = [
            {
                "name": r.name,
                "passed": r.passed,
                "failed": r.failed,
                "failures": r.failures,
                "info": r.info,
            }
            for r in reports
        ]
        _write_text(args.output, _jdump(payload))
    else:
        _write_text(args.output, "".join(r.summary() + "\n" for r in reports))
    return 0 if all(r.ok for r in reports) else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="leafpower",
        description="3-leaf-power recognition, kernelization and exact solving",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io_args(p, output_default="-"):
        p.add_argument("-i", "--input", default="-", help="input graph file (default stdin)")
        p.add_argument("-o", "--output", default=output_default, help="output file (default stdout)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("recognize", help="decide 3-leaf-power membership")
    io_args(p)
    p.add_argument("--certificate", action="store_true",
                   help="emit the leaf root or the obstruction")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("ccgraph", help="critical clique graph and class listing")
    io_args(p)
    p.set_defaults(func=cmd_ccgraph)

    p = sub.add_parser("kernelize", help="reduce an instance with the mode's rules")
    io_args(p)
    p.add_argument("--mode", choices=sorted(_MODE_NAMES), required=True)
    p.add_argument("-k", type=int, required=True, help="modification budget")
    p.add_argument("--trace", help="write the rule trace to this file")
    p.add_argument("--stats", action="store_true", help="print reduction statistics to stderr")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("solve", help="exact decision (kernelize + branch search)")
    io_args(p)
    p.add_argument("--mode", choices=sorted(_MODE_NAMES), required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--no-kernel", action="store_true", help="branch directly on the input")
    p.add_argument("--emit-edits", help="write the edit pairs to this file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="seeded instance generators")
    p.add_argument("--kind", choices=("random_gnp", "random_tree_3lp", "perturbed_3lp"),
                   required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=float, default=None, help="edge probability (gnp)")
    p.add_argument("-r", type=int, default=None, help="perturbation size (perturbed)")
    p.add_argument("--mode", choices=sorted(_MODE_NAMES), default="edit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=_SUITES + ("all",), default="all")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
