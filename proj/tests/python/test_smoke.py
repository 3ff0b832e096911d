import json

import pytest

import nctb


def test_cycle_values():
    nctd_signed = nctb.nctd(nctb.cycle_graph(6))
    assert nctd_signed["k"] == 2
    assert nctd_signed["status"] == "optimal"
    assert nctb.decide(nctb.cycle_graph(6), 2, positive_only=True) is False
    rep = nctb.verify_balls(nctb.cycle_graph(6), nctd_signed["map"])
    assert rep["ok"]


def test_edgeless_and_k2():
    assert nctb.decide(nctb.edgeless(3), 1, positive_only=True, components=True) is True
    assert nctb.decide(nctb.path_graph(2), 1, positive_only=True) is False


def test_tree_map_round_trip():
    g = nctb.random_tree(20, seed=3)
    built = nctb.construct("tree", g)
    assert built["size"] <= 2
    assert len(built["map"]) == len(nctb.balls(g))
    assert nctb.verify_balls(g, built["map"], positive_only=True)["ok"]
    # Breaking one sample shows up as a violation.
    broken = list(built["map"])
    broken[1] = broken[0]
    assert not nctb.verify_balls(g, broken, positive_only=True)["ok"]


def test_interval_and_hyperbolic():
    g, starts, ends = nctb.random_interval(15, seed=2)
    built = nctb.construct("interval", g, (starts, ends))
    assert nctb.verify_balls(g, built["map"], positive_only=True)["ok"]
    h = nctb.random_connected(12, 30, seed=4)
    hm = nctb.construct("hyperbolic", h)
    assert hm["rho"] == nctb.hyperbolicity_doubled(h)
    assert nctb.verify_balls(h, hm["map"], rho=hm["rho"])["ok"]


def test_explicit_concepts():
    rep = nctb.verify([[0], [0, 1]], 2, [([0], []), ([0], [])], positive_only=True)
    assert not rep["ok"]
    assert rep["violations"][0] == ("clash", 0, 1)


def test_kernel_and_reduction():
    k = nctb.kernelize(nctb.star(7))
    assert k["kernel"] == nctb.star(3)
    red = nctb.reduce_setcover(2, [[0], [1], [0, 1]], 1, "split")
    assert red["k"] == len(red["sets"]) + 1
    assert red["graph"].order == 2 + 3 * len(red["sets"]) + 1


def test_errors():
    with pytest.raises(nctb.Error):
        nctb.construct("tree", nctb.cycle_graph(4))
    with pytest.raises(ValueError):
        nctb.Graph(2, [(0, 0)])


def test_cli_json():
    code, out, err = nctb.cli(["--json", "hyperbolicity"], "4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert code == 0
    first, last = out.strip().splitlines()
    assert json.loads(first)["delta_doubled"] == 2
    assert last == "RESULT delta=1 delta_doubled=2"
