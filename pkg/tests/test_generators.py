import pytest

from leafpower.generators import GeneratorSpec, build, gen_random_3lp, gen_random_gnp, perturb
from leafpower.graph import Graph
from leafpower.recognition import is_3_leaf_power
from leafpower.solver import brute_force_opt


class TestRandomLeafPower:
    def test_outputs_are_always_members(self):
        for seed in range(60):
            g = gen_random_3lp(1 + seed % 17, seed=seed)
            assert is_3_leaf_power(g)

    def test_single_internal_node_gives_complete_graph(self):
        g = gen_random_3lp(6, seed=0, internal_nodes=1)
        assert g.m == 15  # K6

    def test_many_internal_nodes_give_sparse_shapes(self):
        g = gen_random_3lp(12, seed=4, internal_nodes=12)
        assert is_3_leaf_power(g)
        assert g.m < 66

    def test_trivial_sizes(self):
        assert gen_random_3lp(0, seed=1).n == 0
        assert gen_random_3lp(1, seed=1).n == 1

    def test_internal_node_count_validated(self):
        with pytest.raises(ValueError):
            gen_random_3lp(3, seed=0, internal_nodes=5)


class TestPerturb:
    def test_zero_flips_is_identity(self):
        g = gen_random_3lp(9, seed=2)
        out, r = perturb(g, 0, "edition", seed=3)
        assert out == g and r == 0

    def test_edition_budget_certified(self):
        g = gen_random_3lp(8, seed=5)
        out, r = perturb(g, 2, "edition", seed=6)
        assert brute_force_opt(out, "edition", r).feasible

    def test_completion_perturbs_by_deletions(self):
        g = gen_random_3lp(8, seed=7)
        out, r = perturb(g, 2, "completion", seed=8)
        assert out.m == g.m - 2
        assert brute_force_opt(out, "completion", r).feasible

    def test_deletion_perturbs_by_insertions(self):
        g = gen_random_3lp(9, seed=11, internal_nodes=7)
        out, r = perturb(g, 1, "deletion", seed=12)
        assert out.m == g.m + 1
        assert brute_force_opt(out, "deletion", r).feasible

    def test_overdraw_rejected(self):
        g = Graph(3, [(0, 1)])
        with pytest.raises(ValueError):
            perturb(g, 5, "completion", seed=0)

    def test_same_seed_same_result(self):
        g = gen_random_3lp(10, seed=13)
        assert perturb(g, 3, "edition", seed=4) == perturb(g, 3, "edition", seed=4)


class TestSpecs:
    def test_identical_spec_identical_graph(self):
        spec = GeneratorSpec(kind="perturbed_3lp", n=15, r=2, mode="deletion", seed=44)
        assert build(spec) == build(spec)

    def test_gnp_determinism_and_range(self):
        a = gen_random_gnp(10, 0.5, seed=1)
        b = gen_random_gnp(10, 0.5, seed=1)
        c = gen_random_gnp(10, 0.5, seed=2)
        assert a == b
        assert a.n == c.n == 10
        assert gen_random_gnp(6, 0.0, seed=0).m == 0
        assert gen_random_gnp(6, 1.0, seed=0).m == 15

    def test_bad_specs_rejected(self):
        with pytest.raises(ValueError):
            GeneratorSpec(kind="grid", n=5)
        with pytest.raises(ValueError):
            GeneratorSpec(kind="random_gnp", n=-1)
        with pytest.raises(ValueError):
            GeneratorSpec(kind="random_gnp", n=3, mode="swap")
