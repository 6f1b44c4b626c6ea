import random
from fractions import Fraction

import pytest

from toughcycles.errors import ResourceLimitError
from toughcycles.graph import Graph, bits_list, component_count, mask_of
from toughcycles.generators import complete, cycle_graph, path_graph, petersen
from toughcycles.invariants import (ToughnessResult, format_rational,
                                    independence_number, is_k_connected,
                                    is_t_tough, min_degree, toughness,
                                    vertex_connectivity)

from oracles import (alpha_bruteforce, connectivity_bruteforce,
                     random_mask_graph, toughness_bruteforce)


def test_toughness_known_values():
    assert toughness(complete(5)).is_infinite
    assert toughness(cycle_graph(5)).value == Fraction(1)
    assert toughness(petersen()).value == Fraction(4, 3)
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    res = star_res = toughness(star)
    assert res.value == Fraction(1, 3)
    assert bits_list(star_res.witness_cut) == [0]


def test_toughness_witness_revalidates():
    rng = random.Random(101)
    for _ in range(150):
        g = random_mask_graph(rng.randrange(2, 9), rng)
        res = toughness(g)
        if res.is_infinite:
            assert g.is_complete()
            continue
        w = component_count(g, res.witness_cut)
        assert w >= 2
        assert Fraction(res.witness_cut.bit_count(), w) == res.value


def test_toughness_degenerate_graphs():
    assert toughness(Graph(0)).is_infinite          # vacuously complete
    assert toughness(Graph(1)).is_infinite
    assert toughness(complete(2)).is_infinite
    assert toughness(Graph(2)).value == 0           # 2 isolated vertices
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    res = toughness(two_k2)
    assert res.value == 0 and res.witness_cut == 0


def test_toughness_matches_bruteforce():
    rng = random.Random(77)
    for _ in range(300):
        g = random_mask_graph(rng.randrange(9), rng)
        expected = toughness_bruteforce(g)
        got = toughness(g)
        assert got.value == expected


def test_toughness_resource_guard():
    g = cycle_graph(30)
    with pytest.raises(ResourceLimitError):
        toughness(g, exhaustive_limit=24)
    res = toughness(g, exhaustive_limit=24, branch_and_bound=True)
    assert res.value == Fraction(1)
    with pytest.raises(ResourceLimitError):
        toughness(g, exhaustive_limit=24, branch_and_bound=True, budget=10)


def test_is_t_tough_examples():
    ok, _ = is_t_tough(cycle_graph(5), 1)
    assert ok
    ok, cut = is_t_tough(petersen(), Fraction(3, 2))
    assert not ok
    w = component_count(petersen(), cut)
    assert w >= 2 and 2 * cut.bit_count() < 3 * w
    for t in (0, 1, 10, Fraction(7, 3)):
        assert is_t_tough(complete(4), t)[0]


def test_is_t_tough_boundary_property():
    rng = random.Random(31)
    eps = Fraction(1, 10**9)
    checked = 0
    while checked < 60:
        g = random_mask_graph(rng.randrange(3, 9), rng)
        res = toughness(g)
        if res.is_infinite or component_count(g) > 1:
            continue
        checked += 1
        assert is_t_tough(g, res.value)[0]
        ok, cut = is_t_tough(g, res.value + eps)
        assert not ok and cut is not None


def test_is_t_tough_huge_rational():
    # arbitrarily large thresholds must stay exact (no kernel overflow path)
    ok, cut = is_t_tough(cycle_graph(6), Fraction(10**30, 10**30 - 1))
    assert not ok and cut is not None
    assert is_t_tough(complete(6), Fraction(10**30))[0]


def test_vertex_connectivity_examples():
    assert vertex_connectivity(complete(4)) == 3
    assert vertex_connectivity(path_graph(3)) == 1
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(Graph(1)) == 0
    assert vertex_connectivity(Graph(0)) == 0
    assert vertex_connectivity(Graph(4, [(0, 1), (2, 3)])) == 0


def test_vertex_connectivity_matches_cut_enumeration():
    assert connectivity_bruteforce(petersen()) == 3
    rng = random.Random(55)
    for _ in range(200):
        g = random_mask_graph(rng.randrange(2, 9), rng)
        assert vertex_connectivity(g) == connectivity_bruteforce(g)


def test_connectivity_at_most_min_degree():
    rng = random.Random(19)
    for _ in range(200):
        g = random_mask_graph(rng.randrange(2, 10), rng)
        assert vertex_connectivity(g) <= min_degree(g)


def test_is_k_connected_agrees_with_flow():
    rng = random.Random(23)
    for _ in range(150):
        g = random_mask_graph(rng.randrange(2, 9), rng)
        kappa = vertex_connectivity(g)
        for k in range(0, g.n + 1):
            ok, cut = is_k_connected(g, k)
            assert ok == (kappa >= k), (g.edges(), k, kappa)
            if not ok and cut is not None:
                assert cut.bit_count() < k
                assert component_count(g, cut) >= 2


def test_independence_number_examples():
    assert independence_number(cycle_graph(5))[0] == 2
    assert independence_number(complete(7))[0] == 1
    alpha, witness = independence_number(petersen())
    assert alpha == 4
    exp_alpha, exp_set = alpha_bruteforce(petersen())
    assert (alpha, tuple(bits_list(witness))) == (exp_alpha, exp_set)


def test_independence_number_matches_bruteforce():
    rng = random.Random(3)
    for _ in range(200):
        g = random_mask_graph(rng.randrange(1, 10), rng)
        alpha, witness = independence_number(g)
        exp_alpha, exp_set = alpha_bruteforce(g)
        assert alpha == exp_alpha
        # lexicographically smallest maximum independent set, by sorted list
        assert tuple(bits_list(witness)) == exp_set
        # witness re-validates
        for v in bits_list(witness):
            assert g.rows[v] & witness == 0


def test_min_degree():
    assert min_degree(petersen()) == 3
    assert min_degree(Graph(4, [(0, 1), (0, 2), (0, 3)])) == 1
    assert min_degree(complete(4)) == 3
    with pytest.raises(ValueError):
        min_degree(Graph(0))


def test_format_rational():
    assert format_rational(None) == "inf"
    assert format_rational(Fraction(4, 3)) == "4/3"
    assert format_rational(Fraction(0)) == "0/1"
