import itertools

import pytest

import gfactor


def cycle(n, copies=1):
    edges = [(v, v % n + 1) for v in range(1, n + 1)] * copies
    return gfactor.MultiGraph(n, edges)


def brute_f_factor(g, f):
    edges = g.edges()
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            deg = [0] * g.num_vertices
            for _, u, v in subset:
                deg[u - 1] += 1
                deg[v - 1] += 1
            if deg == f:
                return True
    return False


def test_degrees_count_loops_twice():
    g = gfactor.MultiGraph(2, [(1, 1), (1, 2)])
    assert g.degrees == [3, 1]


def test_round_trip_text_format():
    g = gfactor.MultiGraph(3, [(1, 2), (2, 3), (3, 1), (3, 3)])
    text = gfactor.serialize_graph(g, [0, 0, 1], [1, 1, 2])
    h, lower, upper = gfactor.parse_graph(text)
    assert gfactor.serialize_graph(h, lower, upper) == text


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        gfactor.parse_graph("e 1 2\n")


def test_f_factor_matches_brute_force():
    assert gfactor.find_f_factor(cycle(3), [1, 1, 1]) is None
    f = gfactor.find_f_factor(cycle(4), [1, 1, 1, 1])
    assert f is not None
    assert gfactor.factor_degrees(cycle(4), f) == [1, 1, 1, 1]
    g = cycle(3, copies=2)
    for target in itertools.product(range(5), repeat=3):
        found = gfactor.find_f_factor(g, list(target)) is not None
        assert found == brute_f_factor(g, list(target))
        assert found == gfactor.tutte_condition(g, list(target))


def test_connectivity_values():
    k4 = gfactor.MultiGraph(4, [(u, v) for u in range(1, 5) for v in range(u + 1, 5)])
    assert gfactor.edge_connectivity(k4) == 3
    assert gfactor.tree_packing_number(k4) == 2
    assert gfactor.tree_packing(k4, 3) is None
    assert gfactor.bipartite_index(k4)[0] == 2
    assert gfactor.toughness(cycle(5)) == (1, 1)
    assert gfactor.toughness(k4) is None


def test_eulerian_half_factor_certificate():
    g = cycle(5, copies=2)
    cert = gfactor.eulerian_half_factor(g, [0] * 5)
    assert cert["status"] == "found"
    assert cert["hypotheses_verified"]
    assert gfactor.factor_degrees(g, cert["factor"]) == [2] * 5


def test_tree_connected_factor():
    g, _ = gfactor.gen_tree_connected(6, trees=8, intra=1, eulerian=True, seed=3)
    lower, upper = gfactor.gen_functions(g, 1, m=1, seed=4)
    cert = gfactor.tree_connected_gf(g, lower, upper, k=1, m=1)
    assert cert["status"] in ("found", "none")
    if cert["status"] == "found":
        degrees = gfactor.factor_degrees(g, cert["factor"])
        assert all(d in (lo, hi) for d, lo, hi in zip(degrees, lower, upper))
        assert len(cert["h_packing"]) == 1


def test_campaign_is_deterministic():
    a = gfactor.verify_theorem("tutte-equiv", 10, seed=7, threads=1)
    b = gfactor.verify_theorem("tutte-equiv", 10, seed=7, threads=3)
    assert a == b
    assert a["hard_errors"] == 0
    assert "eulerian-half" in gfactor.campaign_ids()
