import itertools

import pytest

from wuec.errors import (
    CannotAttach,
    ForcedConflict,
    InputError,
    InvalidEdgeError,
    NotAStarForest,
)
from wuec.graph import (
    ForcedStarPacking,
    MinimalEdgeCover,
    WeightedGraph,
    any_minimal_edge_cover,
    attach_trivials,
    check_cycle_inequality,
    is_edge_cover,
    is_minimal_edge_cover,
    is_nice,
    nicify,
    pendant_edges,
    star_forest_decompose,
)

from helpers import complete, cycle, path, star


class TestWeightedGraph:
    def test_normalizes_endpoints(self):
        g = WeightedGraph(3, [(2, 0, 4)])
        assert g.edges == ((0, 2, 4),)
        assert g.edge_id(2, 0) == 0

    @pytest.mark.parametrize("edges", [
        [(0, 0, 1)],
        [(0, 1, -1)],
        [(0, 1, 1), (1, 0, 2)],
        [(0, 5, 1)],
        [(0, 1, 1.5)],
        [(0, 1)],
    ])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(InputError):
            WeightedGraph(3, edges)

    def test_queries(self):
        g = path([1, 2, 3])
        assert g.m == 3
        assert g.degree(1) == 2 and g.max_degree == 2
        assert sorted(g.neighbors(1)) == [0, 2]
        assert g.other(1, 1) == 2
        assert g.total_weight == 6
        assert g.is_connected() and not g.is_complete()
        assert complete(4).is_complete()
        assert WeightedGraph(3, [(0, 1, 1)]).isolated_vertices() == [2]
        with pytest.raises(InvalidEdgeError):
            g.edge_id(0, 3)

    def test_edge_subgraph_maps_back(self):
        g = cycle([1, 2, 3, 4])
        sub, back = g.edge_subgraph([3, 1])
        assert back == [1, 3]
        assert sub.edges == (g.edges[1], g.edges[3])


class TestCoverPredicates:
    def test_perfect_matching_of_p4(self):
        g = path([1, 1, 1])
        assert is_edge_cover(g, {0, 2})
        assert is_minimal_edge_cover(g, {0, 2})

    def test_optimal_star_forest_leaves_v4_uncovered(self):
        assert not is_edge_cover(path([1, 1, 1]), {0, 1})

    def test_empty_set_on_k2(self):
        assert not is_edge_cover(path([1]), set())

    def test_middle_edge_removable(self):
        assert not is_minimal_edge_cover(path([1, 1, 1]), {0, 1, 2})

    def test_star_needs_every_edge(self):
        assert is_minimal_edge_cover(star(3), {0, 1, 2})

    def test_invalid_edge_id(self):
        with pytest.raises(InvalidEdgeError):
            is_edge_cover(path([1]), {3})

    def test_manlove_equivalence_small_graphs(self):
        # minimal edge cover <=> star forest without trivial stars
        for n in range(1, 6):
            pairs = list(itertools.combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                if bin(mask).count("1") > 6:
                    continue
                g = WeightedGraph(n, [(a, b, 1) for i, (a, b) in enumerate(pairs) if mask >> i & 1])
                for r in range(min(g.m, 4) + 1):
                    for s in itertools.combinations(range(g.m), r):
                        try:
                            sf = star_forest_decompose(g, s)
                            as_forest = not sf.triv
                        except NotAStarForest:
                            as_forest = False
                        assert is_minimal_edge_cover(g, s) == as_forest


class TestStarForestDecompose:
    def test_single_edge(self):
        sf = star_forest_decompose(path([1, 1, 1]), {0})
        assert sf.triv == {2, 3}
        assert sf.centers == {0} and sf.leaves == {1}

    def test_two_leaf_star(self):
        sf = star_forest_decompose(path([1, 1, 1]), {0, 1})
        assert sf.centers == {1}
        assert sf.leaves == {0, 2}
        assert sf.triv == {3}
        assert sf.parent == {0: 1, 2: 1}

    def test_path_of_three_edges_rejected(self):
        with pytest.raises(NotAStarForest):
            star_forest_decompose(path([1, 1, 1]), {0, 1, 2})

    def test_cycle_rejected(self):
        with pytest.raises(NotAStarForest):
            star_forest_decompose(cycle([1, 1, 1]), {0, 1, 2})

    def test_one_star_centre_is_lower_id(self):
        g = WeightedGraph(4, [(3, 2, 5)])
        sf = star_forest_decompose(g, {0})
        assert sf.centers == {2} and sf.in_one_star(3) and sf.in_one_star(2)

    def test_forced_packing_validation(self):
        with pytest.raises(InputError):
            ForcedStarPacking(path([1, 1, 1]), {0, 1, 2})


class TestNicify:
    def test_fig1_from_middle_edge(self, fig1):
        sf = nicify(fig1, star_forest_decompose(fig1, {1}))
        assert sf.edges == {0, 1}
        assert sf.triv == {3}
        assert sf.weight == 5
        assert is_nice(fig1, sf)

    def test_fig1_optimum_already_nice(self, fig1):
        s = star_forest_decompose(fig1, {0, 1})
        assert is_nice(fig1, s)
        assert nicify(fig1, s) == s

    def test_no_trivials_untouched(self):
        g = cycle([1, 2, 3, 4])
        s = star_forest_decompose(g, {0, 2})
        assert nicify(g, s).edges == s.edges

    def test_adjacent_trivials_joined(self):
        g = path([4])
        sf = nicify(g, star_forest_decompose(g, set()))
        assert sf.edges == {0}

    def test_heavier_escape_swaps_leaf_edge(self):
        # star 0-{1,2}, trivial 3 sees leaf 2 with a heavier edge
        g = WeightedGraph(4, [(0, 1, 1), (0, 2, 1), (2, 3, 5)])
        sf = nicify(g, star_forest_decompose(g, {0, 1}))
        assert sf.edges == {0, 2}
        assert sf.weight == 6

    def test_forced_conflict(self):
        g = WeightedGraph(4, [(0, 1, 1), (0, 2, 1), (2, 3, 5)])
        s = star_forest_decompose(g, {0, 1})
        with pytest.raises(ForcedConflict):
            nicify(g, s, ForcedStarPacking(g, {1}))

    def test_forced_must_be_contained(self):
        g = path([1, 1])
        with pytest.raises(InputError):
            nicify(g, star_forest_decompose(g, {0}), ForcedStarPacking(g, {1}))


class TestAttachTrivials:
    def test_fig1_completion(self):
        base = {(0, 1): 2, (1, 2): 3, (2, 3): 2}
        k4 = WeightedGraph.complete(4, lambda u, v: base.get((u, v), 0))
        s = star_forest_decompose(k4, {k4.edge_id(0, 1), k4.edge_id(1, 2)})
        cover = attach_trivials(k4, s)
        assert cover.edges == {k4.edge_id(0, 1), k4.edge_id(1, 2), k4.edge_id(1, 3)}
        assert cover.weight == 5

    def test_no_trivials(self):
        g = path([1, 1, 1])
        assert attach_trivials(g, star_forest_decompose(g, {0, 2})).edges == {0, 2}

    def test_k3_either_endpoint(self):
        g = complete(3)
        cover = attach_trivials(g, star_forest_decompose(g, {g.edge_id(0, 1)}))
        assert cover.weight == 2
        assert cover.edges in ({0, 1}, {0, 2})

    def test_cannot_attach(self):
        g = path([1, 1, 1])
        with pytest.raises(CannotAttach):
            attach_trivials(g, star_forest_decompose(g, {0, 1}))


class TestMisc:
    def test_pendant_edges(self):
        assert pendant_edges(path([1, 1, 1])) == {0, 2}
        assert pendant_edges(cycle([1, 1, 1])) == set()

    def test_any_minimal_edge_cover(self):
        for g in (path([1, 1, 1]), cycle([1] * 5), complete(5), star(4)):
            assert is_minimal_edge_cover(g, any_minimal_edge_cover(g).edges)
        with pytest.raises(InputError):
            any_minimal_edge_cover(WeightedGraph(2))

    def test_minimal_cover_from_edges_validates(self):
        with pytest.raises(InputError):
            MinimalEdgeCover.from_edges(path([1, 1, 1]), {0, 1, 2})


class TestCycleInequality:
    def test_tree_ok(self):
        assert check_cycle_inequality(path([1, 9, 3])) == (True, None)

    def test_c4_violation(self):
        ok, wit = check_cycle_inequality(cycle([1, 1, 1, 5]))
        assert not ok
        assert wit.edge == 3
        assert sorted(wit.cycle) == [0, 1, 2, 3]
        assert wit.cycle_weight == 8
        assert 2 * 5 > wit.cycle_weight

    def test_equality_allowed(self):
        assert check_cycle_inequality(cycle([1, 1, 2]))[0]
