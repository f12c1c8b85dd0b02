import random

import pytest

from cyclepack.core import (
    GraphError,
    Multigraph,
    SimpleGraph,
    in_Dk,
    induced_simple,
    loop_vertices,
    min_simple_degree,
    simple_degree,
    strong_edge_graph,
    underlying_simple,
)
from cyclepack.gen import complete_graph, wheel_graph
from cyclepack.matching import matching_number
from oracles import random_multigraph


def k4_with(*extra):
    return complete_graph(4).with_edges(extra)


class TestLoopVertices:
    def test_loopless(self):
        assert loop_vertices(complete_graph(4)) == frozenset()

    def test_single_loop(self):
        assert loop_vertices(k4_with((0, 0, 1))) == {0}

    def test_counts_do_not_matter(self):
        g = Multigraph(6, [(3, 3, 2), (5, 5, 1)])
        assert loop_vertices(g) == {3, 5}
        assert g.loop_count(3) == 2


class TestUnderlying:
    def test_double_edge_collapses(self):
        h = underlying_simple(Multigraph(2, [(0, 1, 2)]))
        assert h.edges() == [(0, 1)]

    def test_loop_dropped(self):
        h = underlying_simple(Multigraph(2, [(0, 0, 1), (0, 1, 1)]))
        assert h.edges() == [(0, 1)]

    def test_identity_on_simple_input(self):
        g = wheel_graph(5)
        h = underlying_simple(g)
        assert sorted(h.edges()) == sorted((u, v) for u, v, _ in g.pairs())
        again = underlying_simple(Multigraph(h.n, [(u, v, 1) for u, v in h.edges()]))
        assert again == h


class TestStrongEdgeGraph:
    def test_double_edge(self):
        f = strong_edge_graph(Multigraph(2, [(0, 1, 2)]))
        assert f.edges() == [(0, 1)]
        assert f.order() == 2

    def test_loop_kills_strong_edge(self):
        f = strong_edge_graph(Multigraph(2, [(0, 1, 2), (0, 0, 1)]))
        assert f.edges() == []
        assert f.order() == 0

    def test_three_strong_edges_sharing_vertex(self):
        g = Multigraph(6, [(0, 1, 2), (2, 3, 2), (3, 4, 2), (4, 5, 1)])
        f = strong_edge_graph(g)
        assert f.order() == 5
        assert matching_number(f) == 2

    def test_loop_vertices_never_in_f(self):
        rng = random.Random(11)
        for _ in range(200):
            g = random_multigraph(rng.randint(2, 9), rng, strong=0.4, loops=0.3)
            f = strong_edge_graph(g)
            looped = loop_vertices(g)
            assert not (f.active & looped)
            assert all(u not in looped and v not in looped for u, v in f.edges())


class TestDegrees:
    def test_wheel_hub(self):
        assert simple_degree(wheel_graph(5), 0) == 5

    def test_double_edge_counted_once(self):
        assert simple_degree(Multigraph(2, [(0, 1, 3)]), 0) == 1

    def test_loops_excluded(self):
        assert simple_degree(Multigraph(1, [(0, 0, 2)]), 0) == 0

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            simple_degree(complete_graph(3), 3)

    def test_matches_underlying_degree(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_multigraph(rng.randint(1, 9), rng, strong=0.3, loops=0.2)
            h = underlying_simple(g)
            for v in range(g.n):
                assert simple_degree(g, v) == h.degree(v)


class TestDk:
    def test_k5(self):
        assert not in_Dk(complete_graph(5), 3)
        assert in_Dk(complete_graph(5), 2)

    def test_wheel(self):
        assert in_Dk(wheel_graph(5), 2)
        assert min_simple_degree(wheel_graph(5)) == 3

    def test_bad_k(self):
        with pytest.raises(ValueError):
            in_Dk(complete_graph(3), 0)


class TestMultigraph:
    def test_rejects_zero_multiplicity(self):
        with pytest.raises(GraphError):
            Multigraph(2, [(0, 1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Multigraph(2, [(0, 2, 1)])

    def test_duplicates_sum(self):
        g = Multigraph(2, [(0, 1, 1), (1, 0, 1)])
        assert g.multiplicity(0, 1) == 2
        assert g.mult == {(0, 1): 2}

    def test_from_counts_round_trip(self):
        g = Multigraph(4, [(0, 0, 2), (1, 2, 3), (2, 3, 1)])
        assert Multigraph.from_counts(4, g.loops, g.mult) == g

    def test_delete_keeps_id_map(self):
        g = wheel_graph(5)
        rest, ids = g.delete_vertices([0])
        assert rest.n == 5
        assert ids == [1, 2, 3, 4, 5]
        assert all(rest.multiplicity(i, (i + 1) % 5) == 1 for i in range(5))

    def test_induced_simple_keeps_original_ids(self):
        g = wheel_graph(5)
        h = induced_simple(g, [0, 1, 2])
        assert h.vertices() == [0, 1, 2]
        assert sorted(h.edges()) == [(0, 1), (0, 2), (1, 2)]


class TestSimpleGraph:
    def test_complement_and_components(self):
        h = SimpleGraph(4, [(0, 1), (2, 3)])
        c = h.complement()
        assert c.edge_count() == 4
        assert sorted(map(sorted, h.components())) == [[0, 1], [2, 3]]

    def test_clique_and_independent(self):
        h = SimpleGraph(4, [(0, 1), (1, 2), (0, 2)])
        assert h.is_clique([0, 1, 2])
        assert h.is_independent([0, 3])
        assert not h.is_independent([0, 1])
