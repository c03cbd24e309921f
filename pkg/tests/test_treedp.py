import random

import pytest

from wuec.errors import NotAForest
from wuec.exact import ext_wssf_exact, wssf_exact
from wuec.graph import ForcedStarPacking, WeightedGraph, pendant_edges, star_forest_decompose
from wuec.treedp import is_forest, wssf_tree_dp

from helpers import cycle, path, random_forest


def test_fig1(fig1):
    assert wssf_tree_dp(fig1).value == 5


def test_single_edge():
    assert wssf_tree_dp(path([7])).value == 7


def test_forced_pendants():
    g = path([1, 1, 1])
    rep = wssf_tree_dp(g, ForcedStarPacking(g, {0, 2}))
    assert rep.value == 2
    assert rep.witness == {0, 2}


def test_c4_matching_weight():
    # on the spanning path of C4 the DP finds a weight-2 forest
    g = path([1, 1, 1])
    assert wssf_tree_dp(g).value == 2


def test_rejects_cycle():
    assert not is_forest(cycle([1, 1, 1]))
    with pytest.raises(NotAForest):
        wssf_tree_dp(cycle([1, 1, 1]))


def test_empty_and_isolated():
    assert wssf_tree_dp(WeightedGraph(0)).value == 0
    assert wssf_tree_dp(WeightedGraph(3)).value == 0


def test_random_forests_against_oracle():
    rng = random.Random(21)
    for _ in range(150):
        g = random_forest(rng, rng.randint(1, 12))
        rep = wssf_tree_dp(g)
        assert rep.value == wssf_exact(g).value
        assert star_forest_decompose(g, rep.witness).weight == rep.value


def test_random_forced_against_oracle():
    rng = random.Random(22)
    for _ in range(150):
        g = random_forest(rng, rng.randint(2, 12))
        if rng.random() < 0.5:
            u = ForcedStarPacking(g, pendant_edges(g) if _packable(g) else frozenset())
        else:
            u = ForcedStarPacking(g, _random_packing(rng, g))
        rep = wssf_tree_dp(g, u)
        assert u.edges <= rep.witness
        assert rep.value == ext_wssf_exact(g, u).value


def _packable(g):
    try:
        ForcedStarPacking(g, pendant_edges(g))
    except Exception:
        return False
    return True


def _random_packing(rng, g):
    chosen = set()
    for e in rng.sample(range(g.m), g.m):
        try:
            star_forest_decompose(g, chosen | {e})
        except Exception:
            continue
        if rng.random() < 0.4:
            chosen.add(e)
    return chosen
