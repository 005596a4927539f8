import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from leafpower.cliques import critical_clique_graph, critical_cliques
from leafpower.graph import EditSet, Graph, apply_edits
from leafpower.recognition import is_3_leaf_power, join_compose

from conftest import graphs


def complete(n):
    return Graph(n, list(itertools.combinations(range(n), 2)))


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def is_clique_module(g, members):
    members = set(members)
    for u, v in itertools.combinations(sorted(members), 2):
        if not g.has_edge(u, v):
            return False
    outside = [w for w in range(g.n) if w not in members]
    for w in outside:
        hits = {g.has_edge(w, v) for v in members}
        if len(hits) > 1:
            return False
    return True


def brute_critical_cliques(g):
    """Maximal clique modules by exhaustive subset search (oracle)."""
    best = {}
    for size in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            if is_clique_module(g, sub):
                for v in sub:
                    if best.get(v) is None or len(best[v]) < size:
                        best[v] = sub
    return {frozenset(s) for s in best.values()}


class TestPartition:
    def test_complete_graph_is_one_class(self):
        part = critical_cliques(complete(5))
        assert part.classes == (tuple(range(5)),)

    def test_path_three_singletons(self):
        part = critical_cliques(path(3))
        assert part.classes == ((0,), (1,), (2,))

    def test_bull_all_singletons(self):
        bull = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
        expected = brute_critical_cliques(bull)
        part = critical_cliques(bull)
        assert {frozenset(c) for c in part.classes} == expected
        assert all(len(c) == 1 for c in part.classes)

    def test_class_of_is_consistent(self):
        g = complete(3)
        part = critical_cliques(g)
        for i, members in enumerate(part.classes):
            for v in members:
                assert part.class_of[v] == i

    def test_exhaustive_small_graphs_match_oracle(self):
        for n in range(1, 5):
            pairs = list(itertools.combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
                g = Graph(n, edges)
                got = {frozenset(c) for c in critical_cliques(g).classes}
                assert got == brute_critical_cliques(g)

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=80, deadline=None)
    def test_random_graphs_match_oracle(self, g):
        got = {frozenset(c) for c in critical_cliques(g).classes}
        assert got == brute_critical_cliques(g)

    @given(graphs(min_n=1, max_n=10))
    @settings(max_examples=80, deadline=None)
    def test_classes_are_maximal_clique_modules(self, g):
        part = critical_cliques(g)
        covered = set()
        for members in part.classes:
            assert is_clique_module(g, members)
            covered.update(members)
            # no outside vertex can join the class
            for w in range(g.n):
                if w not in members:
                    assert not is_clique_module(g, set(members) | {w})
        assert covered == set(range(g.n))


class TestQuotient:
    def test_complete_graph_quotient_is_one_node(self):
        ccg = critical_clique_graph(complete(5))
        assert ccg.graph.n == 1 and ccg.graph.m == 0
        assert ccg.node_sizes == (5,)
        assert ccg.is_forest

    def test_path_quotient_is_path(self):
        ccg = critical_clique_graph(path(5))
        assert ccg.graph.edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
        assert ccg.is_forest

    def test_joined_triangles_quotient_is_tree(self):
        # two triangles joined on one vertex each: quotient is a 4-node tree
        # and the composed graph stays a 3-leaf power
        t1 = complete(3)
        t2 = complete(3)
        g = join_compose(t1, [0], t2, [0])
        ccg = critical_clique_graph(g)
        assert ccg.is_forest
        assert sorted(ccg.node_sizes) == [1, 1, 2, 2]
        assert is_3_leaf_power(g)

    def test_cycle_quotient_not_forest(self):
        c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert not critical_clique_graph(c4).is_forest

    @given(graphs(min_n=1, max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_quotient_adjacency_means_fully_joined(self, g):
        ccg = critical_clique_graph(g)
        for i in range(ccg.graph.n):
            for j in range(i + 1, ccg.graph.n):
                cross = [
                    g.has_edge(u, v) for u in ccg.classes[i] for v in ccg.classes[j]
                ]
                assert all(cross) or not any(cross)
                assert ccg.graph.has_edge(i, j) == all(cross)

    def test_node_numbering_by_smallest_vertex(self):
        g = Graph(4, [(0, 1), (2, 3)])
        ccg = critical_clique_graph(g)
        assert [min(c) for c in ccg.classes] == sorted(min(c) for c in ccg.classes)


class TestSingleEditGrowth:
    @given(graphs(min_n=2, max_n=10), st.data())
    @settings(max_examples=150, deadline=None)
    def test_one_flip_adds_at_most_four_classes(self, g, data):
        pairs = list(itertools.combinations(range(g.n), 2))
        pair = data.draw(st.sampled_from(pairs))
        before = len(critical_cliques(g).classes)
        flipped = apply_edits(g, EditSet(frozenset([pair]), "edition"))
        after = len(critical_cliques(flipped).classes)
        assert after <= before + 4
