import itertools

import pytest
from hypothesis import given, settings

from leafpower.branches import (
    Branch,
    branch_core_vertices,
    branch_vertices,
    find_1_branches,
    find_clean_2_branches,
    inner_neighborhood,
    outside_neighborhood,
    path_mincut,
)
from leafpower.cliques import critical_clique_graph
from leafpower.graph import Graph, induced_subgraph
from leafpower.recognition import is_3_leaf_power

from conftest import graphs


def cycle(n, extra=()):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)] + list(extra))


def attachment_points_by_definition(g, ccg, nodes):
    """Direct scan: cliques containing a vertex with a neighbor outside."""
    inside = set()
    for node in nodes:
        inside.update(ccg.classes[node])
    points = []
    for node in nodes:
        if any(u not in inside for v in ccg.classes[node] for u in g.neighbors(v)):
            points.append(node)
    return sorted(points)


class TestFind1Branches:
    def test_rays_hanging_off_a_cycle(self):
        # C4 with two pendant paths of different length at vertex 0
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (0, 6), (6, 7)])
        ccg = critical_clique_graph(g)
        branches = find_1_branches(g, ccg)
        assert branches
        top = branches[0]
        verts = branch_vertices(ccg, top)
        assert verts == frozenset({0, 4, 5, 6, 7})
        assert attachment_points_by_definition(g, ccg, top.nodes) == list(top.attachments)

    def test_whole_leaf_power_component_is_not_a_branch(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
        ccg = critical_clique_graph(g)
        assert find_1_branches(g, ccg) == []

    def test_caterpillar_hanging_off_a_quotient_triangle(self):
        # quotient triangle: 3 mutually adjacent vertices with distinct pendants
        edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]
        # caterpillar 6-7-8 hanging off vertex 0
        edges += [(0, 6), (6, 7), (7, 8)]
        g = Graph(9, edges)
        ccg = critical_clique_graph(g)
        branches = find_1_branches(g, ccg)
        verts = {branch_vertices(ccg, b) for b in branches}
        assert frozenset({0, 3, 6, 7, 8}) in verts
        for b in branches:
            assert attachment_points_by_definition(g, ccg, b.nodes) == sorted(b.attachments)

    def test_core_and_inner_neighborhood(self):
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5)])
        ccg = critical_clique_graph(g)
        b = find_1_branches(g, ccg)[0]
        p = b.attachments[0]
        assert branch_core_vertices(ccg, b) == branch_vertices(ccg, b) - set(
            ccg.classes[p]
        )
        inner = inner_neighborhood(ccg, b, p)
        assert all(g.has_edge(ccg.classes[p][0], v) for v in inner)
        outside = outside_neighborhood(g, ccg, b, p)
        assert outside.isdisjoint(branch_vertices(ccg, b))

    @given(graphs(min_n=2, max_n=9))
    @settings(max_examples=100, deadline=None)
    def test_reported_branches_satisfy_the_definition(self, g):
        ccg = critical_clique_graph(g)
        for b in find_1_branches(g, ccg):
            verts = branch_vertices(ccg, b)
            assert is_3_leaf_power(induced_subgraph(g, verts))
            assert attachment_points_by_definition(g, ccg, b.nodes) == sorted(
                b.attachments
            )
            assert len(b.attachments) == 1


class TestFindClean2Branches:
    def test_corridor_between_dense_ends(self):
        # K4 - path of 5 - K4
        edges = list(itertools.combinations(range(4), 2))
        edges += [(3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)]
        edges += [(a + 9, b + 9) for a, b in itertools.combinations(range(4), 2)]
        g = Graph(13, edges)
        ccg = critical_clique_graph(g)
        branches = find_clean_2_branches(g, ccg)
        assert branches
        b = branches[0]
        assert b.clean and b.arity == 2
        assert b.main_sizes == (1,) * 7
        path_verts = sorted(
            v for node in b.main_path for v in ccg.classes[node]
        )
        # the corridor runs between the two clique residues {0,1,2} and {10,11,12}
        assert path_verts == [3, 4, 5, 6, 7, 8, 9]

    def test_pendants_fold_into_the_branch_but_not_the_path(self):
        # corridor 0..5 between hubs of two C4s, pendant 14 on corridor node 2
        edges = [(i, i + 1) for i in range(5)]
        edges += [(0, 6), (6, 7), (7, 8), (8, 0)]  # C4 at left end
        edges += [(5, 9), (9, 10), (10, 11), (11, 5)]  # C4 at right end
        edges += [(2, 12)]
        g = Graph(13, edges)
        ccg = critical_clique_graph(g)
        b = find_clean_2_branches(g, ccg)[0]
        path_verts = {v for node in b.main_path for v in ccg.classes[node]}
        all_verts = branch_vertices(ccg, b)
        assert 12 in all_verts and 12 not in path_verts
        assert b.clean

    def test_attachments_are_leaves_of_the_branch_tree(self):
        edges = [(i, i + 1) for i in range(5)]
        edges += [(0, 6), (6, 7), (7, 8), (8, 0)]
        edges += [(5, 9), (9, 10), (10, 11), (11, 5)]
        g = Graph(12, edges)
        ccg = critical_clique_graph(g)
        for b in find_clean_2_branches(g, ccg):
            p1, p2 = b.attachments
            inside_nbrs_p1 = [x for x in b.nodes if x != p1 and ccg.graph.has_edge(p1, x)]
            inside_nbrs_p2 = [x for x in b.nodes if x != p2 and ccg.graph.has_edge(p2, x)]
            assert len(inside_nbrs_p1) == 1 and len(inside_nbrs_p2) == 1

    def test_cycle_core_yields_its_longest_arc(self):
        g = cycle(9)
        ccg = critical_clique_graph(g)
        branches = find_clean_2_branches(g, ccg)
        assert len(branches) == 1
        b = branches[0]
        assert b.q == 8
        assert 8 not in b.nodes  # largest node stays outside as the connector


    def test_q1_q2_accessors(self):
        g = cycle(9)
        ccg = critical_clique_graph(g)
        b = find_clean_2_branches(g, ccg)[0]
        assert b.q1 == b.main_path[1]
        assert b.q2 == b.main_path[-2]
        assert ccg.graph.has_edge(b.attachments[0], b.q1)
        assert ccg.graph.has_edge(b.attachments[1], b.q2)

    @given(graphs(min_n=3, max_n=10))
    @settings(max_examples=100, deadline=None)
    def test_reported_2_branches_satisfy_the_definition(self, g):
        ccg = critical_clique_graph(g)
        for b in find_clean_2_branches(g, ccg):
            verts = branch_vertices(ccg, b)
            assert is_3_leaf_power(induced_subgraph(g, verts))
            assert attachment_points_by_definition(g, ccg, b.nodes) == sorted(
                b.attachments
            )
            assert len(set(b.attachments)) == 2
            # main path runs attachment to attachment inside the branch
            assert b.main_path[0] == b.attachments[0]
            assert b.main_path[-1] == b.attachments[1]
            for x, y in zip(b.main_path, b.main_path[1:]):
                assert ccg.graph.has_edge(x, y)


def brute_min_separating_cut(sizes):
    """Min cost over all nonempty sets of consecutive-pair cuts that split
    the path (any nonempty set does), at clique granularity."""
    best = None
    links = [(sizes[i] * sizes[i + 1]) for i in range(len(sizes) - 1)]
    for r in range(1, len(links) + 1):
        for combo in itertools.combinations(links, r):
            cost = sum(combo)
            if best is None or cost < best:
                best = cost
    return best


class TestPathMincut:
    def test_examples(self):
        assert path_mincut(Branch(frozenset(), (0, 1), main_path=(0,) * 5, main_sizes=(2, 1, 3, 1, 2))) == (2, 0)
        assert path_mincut(Branch(frozenset(), (0, 1), main_path=(0,) * 4, main_sizes=(1, 1, 1, 1))) == (1, 0)
        for k in range(0, 4):
            b = Branch(frozenset(), (0, 1), main_path=(0,) * 3, main_sizes=(1, k + 1, 1))
            assert path_mincut(b) == (k + 1, 0)

    def test_short_path_rejected(self):
        with pytest.raises(ValueError):
            path_mincut(Branch(frozenset(), (0, 1), main_path=(0,), main_sizes=(3,)))
        with pytest.raises(ValueError):
            path_mincut(Branch(frozenset(), (0,)))

    def test_matches_brute_force_cut_search(self):
        import random

        rng = random.Random(7)
        for _ in range(50):
            sizes = tuple(rng.randint(1, 4) for _ in range(rng.randint(2, 8)))
            b = Branch(frozenset(), (0, 1), main_path=(0,) * len(sizes), main_sizes=sizes)
            value, index = path_mincut(b)
            assert value == brute_min_separating_cut(sizes)
            assert sizes[index] * sizes[index + 1] == value
            assert all(
                sizes[i] * sizes[i + 1] > value for i in range(index)
            )
