import random

import pytest
from hypothesis import given, settings

from leafpower.generators import gen_random_3lp, gen_random_gnp, perturb
from leafpower.graph import Graph, apply_edits
from leafpower.kernel import Instance
from leafpower.recognition import is_3_leaf_power
from leafpower.solver import (
    Solution,
    branch_solve,
    brute_force_opt,
    candidate_pairs,
    clique_uniform_opt,
    solve_with_kernel,
    _is_3lp_bits,
)

from conftest import graphs


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


GEM = Graph(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


class TestBruteForce:
    def test_c4_edition_needs_one_edit(self):
        sol = brute_force_opt(cycle(4), "edition", 1)
        assert sol.feasible and sol.size == 1
        assert is_3_leaf_power(apply_edits(cycle(4), sol.edits))

    def test_leaf_power_needs_nothing(self):
        g = gen_random_3lp(8, seed=1)
        sol = brute_force_opt(g, "edition", 0)
        assert sol.feasible and sol.size == 0 and len(sol.edits) == 0

    def test_c4_deletion_at_zero_budget_fails(self):
        assert not brute_force_opt(cycle(4), "deletion", 0).feasible

    def test_c5_edition(self):
        sol = brute_force_opt(cycle(5), "edition", 1)
        assert sol.feasible and sol.size == 1

    def test_gem_deletion_at_zero_fails(self):
        assert not brute_force_opt(GEM, "deletion", 0).feasible

    def test_deterministic_tie_break(self):
        a = brute_force_opt(cycle(4), "edition", 2)
        b = brute_force_opt(cycle(4), "edition", 2)
        assert a == b

    def test_candidate_pairs_respect_mode(self):
        g = cycle(4)
        assert candidate_pairs(g, "deletion") == g.edges()
        completion = candidate_pairs(g, "completion")
        assert all(not g.has_edge(u, v) for u, v in completion)
        assert len(candidate_pairs(g, "edition")) == 6

    def test_negative_cap_rejected(self):
        with pytest.raises(ValueError):
            brute_force_opt(cycle(4), "edition", -1)


class TestBitwiseMembership:
    @given(graphs(max_n=8))
    @settings(max_examples=120, deadline=None)
    def test_matches_object_level_recognition(self, g):
        assert _is_3lp_bits(g.n, g.adj_bits) == is_3_leaf_power(g)


class TestBranchSolve:
    def test_c5_edition(self):
        sol = branch_solve(cycle(5), "edition", 1)
        assert sol.feasible and sol.size == 1
        assert is_3_leaf_power(apply_edits(cycle(5), sol.edits))

    def test_gem_deletion_zero(self):
        assert not branch_solve(GEM, "deletion", 0).feasible

    def test_solution_edits_are_mode_legal(self):
        g = gen_random_gnp(8, 0.4, seed=11)
        for mode in ("completion", "deletion"):
            sol = branch_solve(g, mode, 3)
            if sol.feasible:
                for u, v in sol.edits.pairs:
                    assert g.has_edge(u, v) == (mode == "deletion")

    def test_agreement_with_brute_force(self):
        rng = random.Random(5)
        modes = ("edition", "completion", "deletion")
        for i in range(60):
            n = rng.randint(4, 9)
            g = gen_random_gnp(n, rng.uniform(0.2, 0.8), seed=rng.randrange(2**32))
            k = rng.randint(0, 3)
            mode = modes[i % 3]
            slow = brute_force_opt(g, mode, k)
            fast = branch_solve(g, mode, k)
            assert slow.feasible == fast.feasible
            assert slow.size == fast.size

    def test_returned_size_is_minimum(self):
        rng = random.Random(9)
        for _ in range(25):
            g = gen_random_gnp(rng.randint(4, 8), 0.5, seed=rng.randrange(2**32))
            sol = branch_solve(g, "edition", 3)
            if sol.feasible and sol.size > 0:
                assert not brute_force_opt(g, "edition", sol.size - 1).feasible


class TestCliqueUniformSearch:
    def test_matches_vertex_level_optimum(self):
        rng = random.Random(21)
        modes = ("edition", "completion", "deletion")
        for i in range(45):
            n = rng.randint(4, 9)
            g = gen_random_gnp(n, rng.uniform(0.2, 0.8), seed=rng.randrange(2**32))
            mode = modes[i % 3]
            k = rng.randint(0, 3)
            uniform = clique_uniform_opt(g, mode, k)
            vertexwise = brute_force_opt(g, mode, k)
            assert uniform.feasible == vertexwise.feasible
            if uniform.feasible:
                assert uniform.size == vertexwise.size

    def test_twins_make_uniform_search_cheaper(self):
        # two true twins adjacent to a C4: quotient has 5 nodes, not 6
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (0, 5), (4, 5)])
        sol = clique_uniform_opt(g, "edition", 2)
        assert sol.feasible
        assert sol.size == brute_force_opt(g, "edition", 2).size


class TestSolveWithKernel:
    def test_perturbed_leaf_powers_stay_yes(self):
        rng = random.Random(3)
        modes = ("edition", "completion", "deletion")
        for i in range(12):
            base = gen_random_3lp(rng.randint(10, 25), seed=rng.randrange(2**32))
            mode = modes[i % 3]
            try:
                g, r = perturb(base, rng.randint(0, 2), mode, seed=rng.randrange(2**32))
            except ValueError:
                continue
            sol = solve_with_kernel(Instance(g, r, mode))
            assert sol.feasible

    def test_no_instance_short_circuits(self):
        g = cycle(8)
        sol = solve_with_kernel(Instance(g, 3, "completion"))
        assert sol == Solution(False)

    def test_verdict_matches_direct_solve(self):
        rng = random.Random(17)
        modes = ("edition", "completion", "deletion")
        for i in range(20):
            n = rng.randint(5, 10)
            g = gen_random_gnp(n, rng.uniform(0.2, 0.7), seed=rng.randrange(2**32))
            mode = modes[i % 3]
            k = rng.randint(0, 2)
            direct = branch_solve(g, mode, k)
            piped = solve_with_kernel(Instance(g, k, mode))
            assert direct.feasible == piped.feasible
