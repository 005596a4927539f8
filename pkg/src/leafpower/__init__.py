"""3-leaf-power toolkit: recognition with certificates, critical clique
quotients, branch detection, cubic kernelization for the edition, completion
and deletion problems, and exact solvers cross-checked against a brute-force
oracle."""

from .branches import Branch, find_1_branches, find_clean_2_branches, path_mincut
from .cliques import (
    CriticalCliqueGraph,
    CriticalCliquePartition,
    critical_clique_graph,
    critical_cliques,
)
from .graph import (
    EditSet,
    Graph,
    GraphFormatError,
    apply_edits,
    connected_components,
    find_induced,
    format_edge_list,
    induced_subgraph,
    parse_edge_list,
)
from .generators import GeneratorSpec, build, gen_random_3lp, gen_random_gnp, perturb
from .kernel import (
    Instance,
    KernelReport,
    KernelStats,
    RuleOutcome,
    RuleRecord,
    apply_rule,
    clique_bound,
    format_trace,
    kernelize,
    replay_trace,
    vertex_bound,
)
from .recognition import (
    LeafRoot,
    Obstruction,
    RecognitionResult,
    build_leaf_root,
    find_obstruction,
    is_3_leaf_power,
    join_compose,
    leaf_root_is_valid,
    obstruction_is_valid,
    recognize,
)
from .solver import Solution, branch_solve, brute_force_opt, clique_uniform_opt, solve_with_kernel

__all__ = [
    "Branch",
    "CriticalCliqueGraph",
    "CriticalCliquePartition",
    "EditSet",
    "GeneratorSpec",
    "Graph",
    "GraphFormatError",
    "Instance",
    "KernelReport",
    "KernelStats",
    "LeafRoot",
    "Obstruction",
    "RecognitionResult",
    "RuleOutcome",
    "RuleRecord",
    "Solution",
    "apply_edits",
    "apply_rule",
    "branch_solve",
    "brute_force_opt",
    "build",
    "build_leaf_root",
    "clique_bound",
    "clique_uniform_opt",
    "connected_components",
    "critical_clique_graph",
    "critical_cliques",
    "find_1_branches",
    "find_clean_2_branches",
    "find_induced",
    "find_obstruction",
    "format_edge_list",
    "format_trace",
    "gen_random_3lp",
    "gen_random_gnp",
    "induced_subgraph",
    "is_3_leaf_power",
    "join_compose",
    "kernelize",
    "leaf_root_is_valid",
    "obstruction_is_valid",
    "parse_edge_list",
    "path_mincut",
    "perturb",
    "recognize",
    "replay_trace",
    "solve_with_kernel",
    "vertex_bound",
]
