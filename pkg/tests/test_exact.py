import random
import threading

import pytest

from wuec.errors import BudgetExceeded, Infeasible
from wuec.exact import (
    Budget,
    alpha_exact,
    ext_wssf_exact,
    gamma_exact,
    uec_enumerate,
    uec_exact,
    uec_unweighted,
    wssf_enumerate,
    wssf_exact,
)
from wuec.graph import ForcedStarPacking, WeightedGraph, is_minimal_edge_cover, star_forest_decompose

from helpers import (
    brute_alpha,
    brute_gamma,
    brute_uec,
    brute_wssf,
    complete,
    cycle,
    path,
    petersen,
    random_graph,
    star,
)


class TestUec:
    def test_fig1(self, fig1):
        rep = uec_exact(fig1)
        assert rep.value == 4
        assert rep.witness == {0, 2}

    def test_star(self):
        assert uec_exact(star(3)).value == 3

    def test_c4(self):
        assert uec_exact(cycle([1, 1, 1, 1])).value == 2

    def test_isolated_vertex_infeasible(self):
        with pytest.raises(Infeasible):
            uec_exact(WeightedGraph(3, [(0, 1, 1)]))

    def test_budget_distinct_from_infeasible(self):
        g = petersen()
        with pytest.raises(BudgetExceeded) as info:
            uec_exact(g, Budget(max_nodes=3))
        assert not isinstance(info.value, Infeasible)
        assert info.value.nodes_explored > 3

    def test_cancellation(self):
        ev = threading.Event()
        ev.set()
        with pytest.raises(BudgetExceeded):
            uec_exact(random_graph(random.Random(0), 14, 0.5), Budget(cancel=ev))

    def test_report_fields(self, fig1):
        rep = uec_exact(fig1)
        assert rep.problem == "uec"
        assert rep.nodes_explored >= 1 and rep.runtime_ms >= 0

    def test_matches_brute_force(self):
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 6), 0.4)
            rep = uec_exact(g)
            assert rep.value == brute_uec(g)
            assert is_minimal_edge_cover(g, rep.witness)
            assert g.total(rep.witness) == rep.value

    def test_matches_enumeration(self):
        rng = random.Random(5)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 7), 0.35)
            if g.m <= 14:
                assert uec_exact(g).value == uec_enumerate(g).value

    def test_petersen(self):
        assert uec_exact(petersen()).value == 10 - 3


class TestWssf:
    def test_fig1(self, fig1):
        rep = wssf_exact(fig1)
        assert rep.value == 5
        assert rep.witness in ({0, 1}, {1, 2})  # two symmetric optima

    def test_single_vertex(self):
        assert wssf_exact(WeightedGraph(1)).value == 0

    def test_c4(self):
        assert wssf_exact(cycle([1, 1, 1, 1])).value == 2

    def test_dominates_uec(self):
        rng = random.Random(2)
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 7), 0.4)
            assert wssf_exact(g).value >= uec_exact(g).value

    def test_matches_brute_force(self):
        rng = random.Random(3)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 6), 0.4, connected=False)
            rep = wssf_exact(g)
            assert rep.value == brute_wssf(g)
            assert star_forest_decompose(g, rep.witness).weight == rep.value


class TestExtWssf:
    def test_forced_first_edge(self, fig1):
        assert ext_wssf_exact(fig1, ForcedStarPacking(fig1, {0})).value == 5

    def test_empty_forced_equals_wssf(self):
        rng = random.Random(4)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 7), 0.4, connected=False)
            assert ext_wssf_exact(g, ForcedStarPacking(g)).value == wssf_exact(g).value

    def test_forced_span(self):
        g = path([1, 1, 1])
        assert ext_wssf_exact(g, ForcedStarPacking(g, {0, 2})).value == 2

    def test_forced_matches_enumeration(self):
        rng = random.Random(6)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 6), 0.4)
            pick = {e for e in range(g.m) if rng.random() < 0.3}
            try:
                u = ForcedStarPacking(g, pick)
            except Exception:
                continue
            rep = ext_wssf_exact(g, u)
            assert rep.value == wssf_enumerate(g, u.edges).value == brute_wssf(g, u.edges)
            assert u.edges <= rep.witness


class TestAlphaGamma:
    @pytest.mark.parametrize("g,alpha,gamma", [
        (path([1, 1]), 2, 1),
        (path([1, 1, 1]), 2, 2),
        (cycle([1] * 5), 2, 2),
        (cycle([1] * 4), 2, 2),
        (star(3), 3, 1),
        (petersen(), 4, 3),
    ])
    def test_known_values(self, g, alpha, gamma):
        assert alpha_exact(g).value == alpha
        assert gamma_exact(g).value == gamma

    def test_witnesses(self):
        rng = random.Random(8)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8), 0.4, connected=False)
            a, d = alpha_exact(g), gamma_exact(g)
            assert a.value == brute_alpha(g) == len(a.witness)
            assert d.value == brute_gamma(g) == len(d.witness)
            assert not any(u in a.witness and v in a.witness for u, v, _ in g.edges)
            dominated = set(d.witness).union(*(g.neighbors(v) for v in d.witness))
            assert dominated == set(range(g.n))

    @pytest.mark.parametrize("g,value", [(path([1, 1, 1]), 2), (star(3), 3), (cycle([1] * 4), 2)])
    def test_uec_unweighted(self, g, value):
        assert uec_unweighted(g) == value == uec_exact(g).value


def test_enumeration_limit():
    with pytest.raises(BudgetExceeded):
        uec_enumerate(complete(7))
