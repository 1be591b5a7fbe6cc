import pytest
from hypothesis import given

from sumboundary import (
    Digraph,
    NotStronglyConnected,
    VertexOutOfRange,
    all_pairs,
    boundary_profile,
    boundary_set,
    contour_set,
    eccentric_set,
    geodesic_interval,
    geodetic_closure,
    graph_boundary_profile,
    is_geodetic_set,
    periphery_set,
    sum_metric_matrix,
)

from conftest import dicycle
from oracles import (
    boundary_type_sets,
    floyd_warshall,
    interval_by_paths,
    neighbor_sets,
    sum_matrix,
)
from strategies import connected_graphs, strong_digraphs

# Frozen from the literal-definition oracle (tests/oracles.py), sum metric.
SIX_VERTEX_SETS = dict(boundary={0, 1, 2, 3, 4, 5}, contour={0, 3},
                  eccentric_set={0, 1, 2, 3, 4, 5}, periphery={0, 3})
FIVE_VERTEX_SETS = dict(boundary={0, 1, 3}, contour={0, 3}, eccentric_set={0, 1, 3}, periphery={0, 3})
SIX_VERTEX_MAX_SETS = dict(boundary={0, 2, 3, 4, 5}, contour={0, 3},
                      eccentric_set={0, 2, 3, 5}, periphery={0, 3})


def as_dict(bp):
    return dict(boundary=bp.boundary, contour=bp.contour,
                eccentric_set=bp.eccentric_set, periphery=bp.periphery)


class TestSets:
    def test_pair(self, pair):
        assert boundary_set(pair) == eccentric_set(pair) == contour_set(pair) == {0, 1}
        assert periphery_set(pair) == {0, 1}

    @pytest.mark.parametrize("n", [2, 3, 4, 7])
    def test_cycle_everything(self, n):
        bp = boundary_profile(dicycle(n))
        assert bp.boundary == bp.contour == bp.eccentric_set == bp.periphery == set(range(n))

    def test_six_vertex(self, six_vertex):
        assert as_dict(boundary_profile(six_vertex)) == SIX_VERTEX_SETS
        assert eccentric_set(six_vertex) >= {0, 3}
        assert contour_set(six_vertex) >= {0, 3}

    def test_five_vertex(self, five_vertex):
        assert as_dict(boundary_profile(five_vertex)) == FIVE_VERTEX_SETS
        assert 1 not in contour_set(five_vertex)
        assert periphery_set(five_vertex) == {0, 3}

    def test_six_vertex_max_metric(self, six_vertex):
        bp = boundary_profile(six_vertex, "max")
        assert bp.metric == "max"
        assert as_dict(bp) == SIX_VERTEX_MAX_SETS

    def test_single_vertex(self):
        bp = boundary_profile(Digraph(1))
        assert bp.boundary == bp.contour == bp.eccentric_set == bp.periphery == {0}

    def test_not_strong(self):
        with pytest.raises(NotStronglyConnected):
            boundary_set(Digraph(2, [(0, 1)]))

    @given(strong_digraphs())
    def test_matches_literal_definitions(self, g):
        expected = boundary_type_sets(sum_matrix(g.n, g.edges()), neighbor_sets(g.n, g.edges()))
        bp = boundary_profile(g)
        assert (bp.boundary, bp.contour, bp.eccentric_set, bp.periphery) == expected

    @given(strong_digraphs())
    def test_containments(self, g):
        bp = boundary_profile(g)
        assert bp.periphery <= bp.contour & bp.eccentric_set
        assert bp.eccentric_set | bp.contour <= bp.boundary
        assert bp.boundary and bp.contour and bp.eccentric_set and bp.periphery

    @given(strong_digraphs())
    def test_containments_max_metric(self, g):
        bp = boundary_profile(g, "max")
        assert bp.periphery <= bp.contour & bp.eccentric_set
        assert bp.eccentric_set | bp.contour <= bp.boundary

    @given(connected_graphs())
    def test_undirected_matches_literal_definitions(self, g):
        expected = boundary_type_sets(
            floyd_warshall(g.n, g.edges(), symmetric=True), neighbor_sets(g.n, g.edges())
        )
        bp = graph_boundary_profile(g)
        assert (bp.boundary, bp.contour, bp.eccentric_set, bp.periphery) == expected


class TestIntervals:
    def test_example(self, six_vertex):
        assert geodesic_interval(six_vertex, 0, 3).vertices == {0, 1, 3, 4, 5}

    def test_trivial(self, six_vertex):
        assert geodesic_interval(six_vertex, 2, 2).vertices == {2}

    def test_cycle(self):
        assert geodesic_interval(dicycle(4), 0, 2).vertices == {0, 1, 2, 3}

    def test_range(self, six_vertex):
        with pytest.raises(VertexOutOfRange):
            geodesic_interval(six_vertex, 0, 6)

    def test_not_strong(self):
        with pytest.raises(NotStronglyConnected):
            geodesic_interval(Digraph(2, [(0, 1)]), 0, 1)

    @given(strong_digraphs(max_n=7))
    def test_matches_path_enumeration(self, g):
        for u in range(g.n):
            for v in range(g.n):
                assert geodesic_interval(g, u, v).vertices == interval_by_paths(g.n, g.edges(), u, v)

    @given(strong_digraphs())
    def test_symmetric(self, g):
        for u in range(g.n):
            for v in range(g.n):
                assert geodesic_interval(g, u, v).vertices == geodesic_interval(g, v, u).vertices

    @given(strong_digraphs())
    def test_membership_rule(self, g):
        d = all_pairs(g)
        for u in range(g.n):
            for v in range(g.n):
                expect = {w for w in range(g.n)
                          if d[u][w] + d[w][v] == d[u][v] or d[v][w] + d[w][u] == d[v][u]}
                assert geodesic_interval(g, u, v).vertices == expect


class TestClosure:
    def test_example(self, six_vertex):
        assert geodetic_closure(six_vertex, {0, 3}) == {0, 1, 3, 4, 5}

    def test_everything(self, six_vertex):
        assert geodetic_closure(six_vertex, range(6)) == set(range(6))

    def test_singleton(self, six_vertex):
        assert geodetic_closure(six_vertex, {4}) == {4}

    def test_geodetic(self, six_vertex):
        assert is_geodetic_set(six_vertex, range(6))
        assert not is_geodetic_set(six_vertex, {0, 3})
        assert not is_geodetic_set(dicycle(3), {0})

    def test_range(self, six_vertex):
        with pytest.raises(VertexOutOfRange):
            geodetic_closure(six_vertex, {9})

    @given(strong_digraphs(max_n=8))
    def test_monotone(self, g):
        full = list(range(g.n))
        for k in range(g.n + 1):
            assert geodetic_closure(g, full[:k]) <= geodetic_closure(g, full[:k + 1])
            assert set(full[:k]) <= geodetic_closure(g, full[:k])
