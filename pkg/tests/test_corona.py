import pytest
from hypothesis import given, settings, strategies as st

from sumboundary import (
    CoreTooSmall,
    CoronaVertex,
    Digraph,
    HTooSmall,
    NotConnected,
    NotStronglyConnected,
    UndirectedGraph,
    all_pairs,
    corona_directed,
    corona_distance_directed,
    corona_distance_matrix_directed,
    corona_distance_matrix_undirected,
    corona_distance_undirected,
    corona_ecc_directed,
    corona_ecc_undirected,
    corona_profile_directed,
    corona_profile_undirected,
    corona_undirected,
    eccentricity_profile,
    is_strong,
    capped_sum_distance,
    verify_corona,
)

from conftest import dicycle, path_graph
from oracles import (
    boundary_type_sets,
    corona_edges_directed,
    corona_edges_undirected,
    eccentricities,
    floyd_warshall,
    neighbor_sets,
    sum_matrix,
)
from strategies import connected_graphs, digraphs, graphs, strong_digraphs

K2 = UndirectedGraph(2, [(0, 1)])
C4 = dicycle(4)


def oracle_directed(d, h):
    size, edges = corona_edges_directed(d.n, d.edges(), h.n, h.edges())
    return size, edges, sum_matrix(size, edges)


def oracle_undirected(g, h):
    size, edges = corona_edges_undirected(g.n, g.edges(), h.n, h.edges())
    return size, edges, floyd_warshall(size, edges, symmetric=True)


class TestLayout:
    def test_indices(self):
        assert CoronaVertex.core(2).index(3, 4) == 2
        assert CoronaVertex.copy(1, 3).index(3, 4) == 3 + 4 + 3

    @given(st.integers(1, 6), st.integers(2, 5), st.data())
    def test_roundtrip(self, n, m, data):
        idx = data.draw(st.integers(0, n * (1 + m) - 1))
        assert CoronaVertex.from_index(idx, n, m).index(n, m) == idx

    def test_labels(self, pair):
        prod = corona_directed(pair, Digraph(2))
        assert prod.labels() == ["u0", "u1", "v0^0", "v1^0", "v0^1", "v1^1"]


class TestConstruction:
    def test_k2_with_independent_pair(self):
        prod = corona_undirected(K2, UndirectedGraph(2))
        assert prod.product.n == 6
        assert prod.product.num_edges == 5

    def test_p3_with_k2(self):
        prod = corona_undirected(path_graph(3), K2)
        assert prod.product.n == 9
        assert prod.product.num_edges == 11

    @given(graphs(max_n=5), graphs(min_n=2, max_n=5))
    def test_copy_degree(self, g, h):
        prod = corona_undirected(g, h)
        for i in range(g.n):
            for r in range(h.n):
                assert prod.product.degree(prod.index(CoronaVertex.copy(i, r))) == h.degree(r) + 1

    def test_directed_counts(self, pair):
        prod = corona_directed(pair, Digraph(2))
        assert prod.product.n == 6
        assert prod.product.num_edges == 10

    def test_directed_strong_with_one_way_h(self):
        prod = corona_directed(dicycle(3), Digraph(2, [(0, 1)]))
        assert is_strong(prod.product)

    @given(strong_digraphs(max_n=5), digraphs(min_n=2, max_n=4))
    def test_directed_matches_oracle_edges(self, d, h):
        prod = corona_directed(d, h)
        _, edges = corona_edges_directed(d.n, d.edges(), h.n, h.edges())
        assert prod.product.edges() == sorted(set(edges))
        assert is_strong(prod.product)
        d_prod = all_pairs(prod.product)
        for i in range(d.n):
            for r in range(h.n):
                x = prod.index(CoronaVertex.copy(i, r))
                assert d_prod[x][i] == d_prod[i][x] == 1

    def test_h_too_small(self, pair):
        with pytest.raises(HTooSmall):
            corona_directed(pair, Digraph(1))
        with pytest.raises(HTooSmall):
            corona_undirected(K2, UndirectedGraph(1))

    def test_core_not_strong(self):
        with pytest.raises(NotStronglyConnected):
            corona_directed(Digraph(2, [(0, 1)]), Digraph(2))


class TestUndirectedDistances:
    def test_core_to_far_copy(self):
        g = path_graph(3)
        assert corona_distance_undirected(g, K2, CoronaVertex.core(0), CoronaVertex.copy(2, 1)) == 3

    def test_same_copy_nonadjacent(self):
        g = path_graph(3)
        h = UndirectedGraph(3, [(0, 1), (1, 2)])
        assert corona_distance_undirected(g, h, CoronaVertex.copy(1, 0), CoronaVertex.copy(1, 2)) == 2

    def test_same_copy_disconnected_h(self):
        h = UndirectedGraph(2)
        assert corona_distance_undirected(K2, h, CoronaVertex.copy(0, 0), CoronaVertex.copy(0, 1)) == 2

    def test_self(self):
        assert corona_distance_undirected(K2, K2, 3, 3) == 0

    def test_not_connected(self):
        with pytest.raises(NotConnected):
            corona_distance_undirected(UndirectedGraph(2), K2, 0, 1)

    @settings(max_examples=60)
    @given(connected_graphs(max_n=6), graphs(min_n=2, max_n=5))
    def test_matches_oracle(self, g, h):
        _, _, expected = oracle_undirected(g, h)
        assert corona_distance_matrix_undirected(g, h).tolist() == expected


class TestDirectedDistances:
    def test_core_to_own_copy(self, six_vertex):
        assert corona_distance_directed(six_vertex, C4, CoronaVertex.core(2), CoronaVertex.copy(2, 1)) == 2

    def test_same_copy_bidirected(self, six_vertex, pair):
        x, y = CoronaVertex.copy(0, 0), CoronaVertex.copy(0, 1)
        assert corona_distance_directed(six_vertex, pair, x, y) == 2

    def test_same_copy_c4_corrected(self, pair):
        x, y = CoronaVertex.copy(0, 0), CoronaVertex.copy(0, 1)
        assert corona_distance_directed(pair, C4, x, y) == 3
        assert capped_sum_distance(C4, 0, 1) == 4
        _, _, oracle = oracle_directed(pair, C4)
        assert oracle[x.index(2, 4)][y.index(2, 4)] == 3

    def test_same_copy_one_way_h(self, pair):
        h = Digraph(2, [(0, 1)])
        assert corona_distance_directed(pair, h, 2, 3) == 3
        assert capped_sum_distance(h, 0, 1) == 4

    @settings(max_examples=60)
    @given(strong_digraphs(max_n=6), digraphs(min_n=2, max_n=5))
    def test_matches_oracle(self, d, h):
        _, _, expected = oracle_directed(d, h)
        assert corona_distance_matrix_directed(d, h).tolist() == expected


class TestEccentricities:
    def test_undirected_core_center(self):
        assert corona_ecc_undirected(path_graph(3), K2, CoronaVertex.core(1)) == 2

    def test_undirected_copy(self):
        assert corona_ecc_undirected(path_graph(3), K2, CoronaVertex.copy(0, 1)) == 4

    def test_directed(self, six_vertex, pair):
        assert corona_ecc_directed(six_vertex, pair, CoronaVertex.core(0)) == 8
        assert corona_ecc_directed(six_vertex, pair, CoronaVertex.copy(0, 1)) == 10

    def test_single_vertex_core_breaks_shift(self, pair):
        # K1 with a bidirected pair: copy vertices are at sum distance 2 from everything
        k1 = Digraph(1)
        assert eccentricity_profile(corona_directed(k1, pair).product).ecc == (2, 2, 2)
        with pytest.raises(CoreTooSmall):
            corona_ecc_directed(k1, pair, 1)
        with pytest.raises(CoreTooSmall):
            corona_profile_undirected(UndirectedGraph(1), K2)

    @given(connected_graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=4))
    def test_undirected_matches_oracle(self, g, h):
        _, _, dist = oracle_undirected(g, h)
        ecc = eccentricities(dist)
        assert [corona_ecc_undirected(g, h, x) for x in range(len(ecc))] == ecc

    @given(strong_digraphs(min_n=2, max_n=6), digraphs(min_n=2, max_n=4))
    def test_directed_matches_oracle(self, d, h):
        _, _, dist = oracle_directed(d, h)
        ecc = eccentricities(dist)
        assert [corona_ecc_directed(d, h, x) for x in range(len(ecc))] == ecc


class TestProfiles:
    def test_p3_k2(self):
        p = corona_profile_undirected(path_graph(3), K2)
        assert (p.radius, p.diameter) == (2, 4)
        assert p.center == {1}
        assert p.periphery == {3, 4, 7, 8}
        assert p.contour == p.boundary == set(range(3, 9))

    def test_k2_k2_eccentric(self):
        assert corona_profile_undirected(K2, K2).eccentric_set == {2, 3, 4, 5}

    def test_three_cycle(self, pair):
        p = corona_profile_directed(dicycle(3), pair)
        assert (p.radius, p.diameter) == (5, 7)
        assert p.center == {0, 1, 2}
        copies = set(range(3, 9))
        assert p.periphery == p.eccentric_set == p.contour == p.boundary == copies

    def test_six_vertex(self, six_vertex, pair):
        p = corona_profile_directed(six_vertex, pair)
        assert (p.radius, p.diameter) == (6, 10)
        assert p.center == {2, 4, 5}
        assert p.periphery == {6, 7, 12, 13}

    @settings(max_examples=60)
    @given(connected_graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=4))
    def test_undirected_matches_oracle(self, g, h):
        size, edges, dist = oracle_undirected(g, h)
        ecc = eccentricities(dist)
        b, ct, e, per = boundary_type_sets(dist, neighbor_sets(size, edges))
        p = corona_profile_undirected(g, h)
        assert p.ecc == tuple(ecc)
        assert (p.radius, p.diameter) == (min(ecc), max(ecc))
        assert p.center == {v for v in range(size) if ecc[v] == min(ecc)}
        assert (p.boundary, p.contour, p.eccentric_set, p.periphery) == (b, ct, e, per)

    @settings(max_examples=60)
    @given(strong_digraphs(min_n=2, max_n=6), digraphs(min_n=2, max_n=4))
    def test_directed_matches_oracle(self, d, h):
        size, edges, dist = oracle_directed(d, h)
        ecc = eccentricities(dist)
        b, ct, e, per = boundary_type_sets(dist, neighbor_sets(size, edges))
        p = corona_profile_directed(d, h)
        assert p.ecc == tuple(ecc)
        assert (p.radius, p.diameter) == (min(ecc), max(ecc))
        assert p.center == {v for v in range(size) if ecc[v] == min(ecc)}
        assert (p.boundary, p.contour, p.eccentric_set, p.periphery) == (b, ct, e, per)


class TestVerify:
    def test_three_cycle_with_pair(self, pair):
        rep = verify_corona(dicycle(3), pair, "directed")
        assert rep.ok
        assert rep.capped_sum_divergences == []

    def test_pair_with_c4(self, pair):
        rep = verify_corona(pair, C4, "directed")
        assert rep.ok
        assert not rep.distance_witnesses
        # every adjacent same-copy pair, both orientations, in both copies
        assert len(rep.capped_sum_divergences) == 16
        assert {(v, o) for _, _, v, o in rep.capped_sum_divergences} == {(4, 3)}
        assert rep.capped_sum_divergences == sorted(rep.capped_sum_divergences)
        assert rep.capped_sum_divergences[0] == (2, 3, 4, 3)

    def test_p3_k2(self):
        rep = verify_corona(path_graph(3), K2, "undirected")
        assert rep.ok and not rep.capped_sum_divergences
        assert all(rep.matches.values())

    def test_single_vertex_core_skips_profile(self, pair):
        rep = verify_corona(Digraph(1), pair, "directed")
        assert rep.ok
        assert "radius" in rep.skipped

    def test_bad_family(self, pair):
        with pytest.raises(ValueError):
            verify_corona(pair, pair, "mixed")

    def test_report_dict(self, pair):
        d = verify_corona(pair, C4, "directed").to_dict()
        assert d["ok"] is True
        assert d["capped_sum_divergences"][0] == [2, 3, 4, 3]
