import random
from fractions import Fraction

import pytest

from toughcycles.cycles import Cycle, find_hamiltonian_cycle, is_valid_cycle
from toughcycles.graph import Graph, bits_list, mask_of
from toughcycles.generators import cycle_graph, path_graph, petersen
from toughcycles import proof_replay as pr

from oracles import random_mask_graph


def hexagon_plus(extra, n=7):
    return Graph(n, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)] + extra)


C6 = Cycle.from_sequence(range(6))
C8 = Cycle.from_sequence(range(8))
C10 = Cycle.from_sequence(range(10))


def c_n_plus(n, extra, total):
    return Graph(total, [(i, (i + 1) % n) for i in range(n)] + extra)


# ---------------------------------------------------------------------------
# context construction


def test_build_context_hand_computed():
    # hexagon with a center adjacent to alternating rim vertices
    g = hexagon_plus([(6, 0), (6, 2), (6, 4)])
    ctx = pr.build_context(g, C6, 6, 3)
    assert ctx.d == 3
    assert ctx.v == (0, 2, 4)
    assert ctx.u == (1, 3, 5)
    assert ctx.w == (1, 3, 5)
    assert bits_list(ctx.u_mask) == [1, 3, 5]
    assert bits_list(ctx.n_g_u) == [0, 2, 4]


def test_build_context_petersen():
    g = petersen()
    chosen = pr.choose_cycle_and_h(g)
    assert chosen is not None
    c, h = chosen
    ctx = pr.build_context(g, c, h, 3)
    assert ctx.d == 3
    assert len(set(ctx.u)) == 3
    assert ctx.u_mask & c.mask() == ctx.u_mask  # successors live on the cycle
    # rotation preserves the apparatus as sets
    rot = ctx.rotate(1)
    assert sorted(rot.v) == sorted(ctx.v)
    assert rot.u_mask == ctx.u_mask
    assert rot.v[0] == ctx.v[1]


def test_build_context_errors():
    g = hexagon_plus([(6, 0), (6, 2)])
    with pytest.raises(ValueError, match="lies on the cycle"):
        pr.build_context(g, C6, 0, 2)
    # neighbor of h off the cycle: add an 8th vertex adjacent to h
    g2 = hexagon_plus([(6, 0), (6, 7)], n=8)
    with pytest.raises(ValueError, match="off the cycle"):
        pr.build_context(g2, C6, 6, 2)
    g3 = hexagon_plus([], n=7)
    with pytest.raises(ValueError, match="no neighbors"):
        pr.build_context(g3, C6, 6, 2)


def test_choose_cycle_and_h():
    assert pr.choose_cycle_and_h(cycle_graph(5)) is None  # hamiltonian
    assert pr.choose_cycle_and_h(path_graph(4)) is None   # acyclic
    # the alternating-center hexagon: the center has the max degree (3) and
    # only the pure hexagon leaves it off-cycle
    g = hexagon_plus([(6, 0), (6, 2), (6, 4)])
    c, h = pr.choose_cycle_and_h(g)
    assert h == 6 and c == C6
    # petersen: a 9-cycle and the unique off-cycle vertex, degree 3
    c, h = pr.choose_cycle_and_h(petersen())
    assert len(c) == 9
    assert petersen().degree(h) == 3
    assert not (c.mask() >> h) & 1
    # deterministic across calls
    assert pr.choose_cycle_and_h(petersen()) == (c, h)


# ---------------------------------------------------------------------------
# claim: U + h independent


def test_claim_u_independent_holds_on_longest():
    g = hexagon_plus([(6, 0), (6, 2), (6, 4)])
    ctx = pr.build_context(g, C6, 6, 3)
    rep = pr.claim_u_independent(ctx)
    assert rep.holds and rep.improvement is None


def test_claim_u_independent_u_pair_violation():
    # non-longest fixture: successors u1=1, u2=4 joined by a chord
    g = hexagon_plus([(6, 0), (6, 3), (1, 4)])
    ctx = pr.build_context(g, C6, 6, 2)
    rep = pr.claim_u_independent(ctx)
    assert not rep.holds
    assert rep.witness["offending_edges"] == [[1, 4]]
    assert rep.improvement is not None
    assert len(rep.improvement) == 7
    assert is_valid_cycle(g, rep.improvement.vertices)


def test_claim_u_independent_h_adjacent_successor():
    g = hexagon_plus([(6, 0), (6, 1)])
    ctx = pr.build_context(g, C6, 6, 2)
    rep = pr.claim_u_independent(ctx)
    assert not rep.holds
    assert rep.improvement is not None and len(rep.improvement) == 7


def test_claim_u_independent_d1():
    g = hexagon_plus([(6, 0)])
    ctx = pr.build_context(g, C6, 6, 2)
    assert pr.claim_u_independent(ctx).holds  # u1 = 1 not adjacent to h


# ---------------------------------------------------------------------------
# claim: V - N(U) independent, half bound, N(U) on the cycle


def test_claim_nonneighbors_all_hold_on_petersen():
    c, h = pr.choose_cycle_and_h(petersen())
    ctx = pr.build_context(petersen(), c, h, 3)
    rep = pr.claim_nonneighbors_independent(ctx, freeness_verified=True,
                                            toughness_verified=True)
    assert rep.holds
    assert rep.witness["sub_assertions"] == {
        "non_neighbors_independent": True,
        "neighbors_cover_half": True,
        "neighbors_on_cycle": True,
    }


def test_claim_nonneighbors_violations():
    # isolated edge 7-8 far from the hexagon apparatus
    g = hexagon_plus([(6, 0), (6, 2), (6, 4), (7, 8)], n=9)
    ctx = pr.build_context(g, C6, 6, 2)
    rep = pr.claim_nonneighbors_independent(ctx)
    assert not rep.holds
    sub = rep.witness["sub_assertions"]
    assert not sub["non_neighbors_independent"]
    assert rep.witness["offending_edge"] == [7, 8]
    assert sorted(rep.witness["forbidden_pattern"]) == [1, 3, 7, 8]
    # N(U) = {0,2,4} covers 3 of 9 < half
    assert not sub["neighbors_cover_half"]


def test_claim_nonneighbors_off_cycle_neighbor():
    g = hexagon_plus([(6, 0), (6, 2), (6, 4), (7, 1)], n=8)
    ctx = pr.build_context(g, C6, 6, 2)
    rep = pr.claim_nonneighbors_independent(ctx)
    sub = rep.witness["sub_assertions"]
    assert not sub["neighbors_on_cycle"]
    assert rep.witness["off_cycle_neighbor"] == 7
    assert sorted(rep.witness["forbidden_pattern"]) == [1, 3, 6, 7]


# ---------------------------------------------------------------------------
# claim: degree of dominated vertices into U


def test_claim_neighbor_degree_lower_petersen():
    c, h = pr.choose_cycle_and_h(petersen())
    ctx = pr.build_context(petersen(), c, h, 3)
    rep = pr.claim_neighbor_degree_lower(ctx)
    assert rep.holds
    e = rep.witness["edge_count"]
    # successors are 3-regular with no neighbors inside U or at h
    assert e == 9
    assert pr.edge_count_u_to_neighbors(ctx) == sum(
        1 for u in ctx.u for y in bits_list(ctx.n_g_u)
        if petersen().has_edge(u, y))


def test_claim_neighbor_degree_lower_violation():
    # not pattern-free: vertex 2 sees only u1=1 of U={1,4}, threshold 2
    g = hexagon_plus([(6, 0), (6, 3)])
    ctx = pr.build_context(g, C6, 6, 2)
    rep = pr.claim_neighbor_degree_lower(ctx)
    assert not rep.holds
    bad = {f["vertex"] for f in rep.witness["per_vertex_failures"]}
    assert 2 in bad


# ---------------------------------------------------------------------------
# claim: successor degrees bounded by d


def test_claim_u_degree_upper_boundary_holds():
    g = hexagon_plus([(6, 0), (6, 2), (6, 4)])
    ctx = pr.build_context(g, C6, 6, 3)
    rep = pr.claim_u_degree_upper(ctx)
    assert rep.holds
    assert rep.witness["edge_count"] <= 9


def test_claim_u_degree_upper_direct_bypass():
    # suboptimal h: u1=1 has degree 3 > d=2 and its successor is the next
    # h-neighbor, so the rerouted cycle drops u1 and keeps the length
    g = hexagon_plus([(6, 0), (6, 2), (1, 4)])
    ctx = pr.build_context(g, C6, 6, 2)
    rep = pr.claim_u_degree_upper(ctx)
    assert not rep.holds
    assert rep.replacement is not None
    assert rep.replacement.exposed == 1
    assert len(rep.replacement.cycle) == 6
    assert is_valid_cycle(g, rep.replacement.cycle.vertices)
    assert g.degree(rep.replacement.exposed) > ctx.d


def test_claim_u_degree_upper_via_second_successor():
    g = hexagon_plus([(6, 0), (6, 3), (2, 4), (1, 5)])
    ctx = pr.build_context(g, C6, 6, 2)
    rep = pr.claim_u_degree_upper(ctx)
    assert not rep.holds
    assert rep.replacement is not None and len(rep.replacement.cycle) == 6


# ---------------------------------------------------------------------------
# order bound function and the h-degree window claim


def test_order_upper_bound_values():
    assert pr.order_upper_bound(4, 4) == Fraction(20)  # k^2 + k at d = k
    assert pr.order_upper_bound(5, 4) == Fraction(20)
    assert pr.order_upper_bound(2, 2) == Fraction(6)
    with pytest.raises(ValueError):
        pr.order_upper_bound(2, 4)  # d = k - 2


def test_order_upper_bound_max_over_window():
    for k in range(4, 11):
        hi = (k * k - k - 2) // 2
        values = [pr.order_upper_bound(d, k) for d in range(k, hi + 1)]
        assert max(values) == k * k + k


def test_order_upper_bound_identity_at_k():
    for k in range(2, 51):
        assert pr.order_upper_bound(k, k) == k * k + k


def test_claim_h_degree_window():
    c, h = pr.choose_cycle_and_h(petersen())
    ctx = pr.build_context(petersen(), c, h, 3)
    rep = pr.claim_h_degree_lower_bound(ctx)
    assert rep.holds  # 2*3 > 9-3-2
    assert rep.witness["order_floor_met"] is False  # 10 < 13


# ---------------------------------------------------------------------------
# consecutive pair and its bounds


def test_find_consecutive_pair_petersen():
    c, h = pr.choose_cycle_and_h(petersen())
    ctx = pr.build_context(petersen(), c, h, 3)
    pair = pr.find_consecutive_pair(ctx)
    assert pair is not None
    assert not petersen().has_edge(h, pair.x)
    assert 1 <= pair.l_index <= 3 and 1 <= pair.r_index <= 3


def test_find_consecutive_pair_alternating_none():
    # C8 with h adjacent to antipodal rim vertices: N(U) = even rim vertices
    g = c_n_plus(8, [(8, 0), (8, 4)], 9)
    ctx = pr.build_context(g, C8, 8, 2)
    report, pair = pr.claim_consecutive_pair(ctx)
    assert pair is None and not report.holds
    assert report.witness["outside_exceeds_half"]
    assert report.witness["outside_n_g_u"] == 9 - 4


def test_pair_crossing_exchange():
    g = c_n_plus(8, [(8, 0), (8, 4), (6, 1), (7, 5)], 9)
    ctx = pr.build_context(g, C8, 8, 2)
    pair = pr.find_consecutive_pair(ctx)
    assert pair == pr.ConsecutivePair(x=6, l_index=1, r_index=2, rotation=0)
    rep = pr.claim_pair_neighborhood_bounds(ctx, pair)
    assert not rep.holds
    assert rep.improvement is not None and len(rep.improvement) == 9
    assert is_valid_cycle(g, rep.improvement.vertices)


def test_pair_successor_adjacent_h_exchange():
    g = c_n_plus(8, [(8, 0), (8, 2), (6, 1), (7, 1)], 9)
    ctx = pr.build_context(g, C8, 8, 2)
    pair = pr.find_consecutive_pair(ctx)
    assert pair is not None and pair.x == 6
    rep = pr.claim_pair_neighborhood_bounds(ctx, pair)
    assert not rep.holds
    assert rep.witness["u_l_successor_adjacent_h"]
    assert rep.improvement is not None and len(rep.improvement) == 9


def test_pair_low_stray_exchange():
    g = c_n_plus(10, [(10, 0), (10, 3), (10, 6), (8, 4), (9, 4), (5, 1)], 11)
    ctx = pr.build_context(g, C10, 10, 4)
    pair = pr.consecutive_pair_at(ctx, 8)
    assert (pair.l_index, pair.r_index) == (2, 2)
    rep = pr.claim_pair_neighborhood_bounds(ctx, pair)
    assert not rep.holds
    assert 1 in rep.witness["stray_indices"]
    assert rep.improvement is not None and len(rep.improvement) == 11
    assert is_valid_cycle(g, rep.improvement.vertices)


def test_pair_high_stray_exchange():
    g = c_n_plus(10, [(10, 0), (10, 3), (10, 6), (8, 4), (9, 4), (5, 7)], 11)
    ctx = pr.build_context(g, C10, 10, 4)
    pair = pr.consecutive_pair_at(ctx, 8)
    rep = pr.claim_pair_neighborhood_bounds(ctx, pair)
    assert not rep.holds
    assert 3 in rep.witness["stray_indices"]
    assert rep.improvement is not None and len(rep.improvement) == 11


def test_pair_bounds_hold_on_petersen():
    c, h = pr.choose_cycle_and_h(petersen())
    ctx = pr.build_context(petersen(), c, h, 3)
    pair = pr.find_consecutive_pair(ctx)
    rep = pr.claim_pair_neighborhood_bounds(ctx, pair)
    assert rep.holds and rep.improvement is None
    sizes = rep.witness["size_bounds"]
    assert sizes["n_x"][2] and sizes["n_x_successor"][2] and sizes["n_u_l_successor"][2]


def test_pair_degenerate_d_equals_k_thresholds():
    # d = k: the required sizes collapse to 2 / 1 / 2
    c, h = pr.choose_cycle_and_h(petersen())
    ctx = pr.build_context(petersen(), c, h, 3)
    pair = pr.find_consecutive_pair(ctx)
    rep = pr.claim_pair_neighborhood_bounds(ctx, pair)
    assert rep.witness["size_bounds"]["n_x"][1] == 2
    assert rep.witness["size_bounds"]["n_x_successor"][1] == 1
    assert rep.witness["size_bounds"]["n_u_l_successor"][1] == 2


# ---------------------------------------------------------------------------
# final arithmetic


def test_final_arithmetic_examples():
    rep = pr.final_arithmetic(4, 6, 1, 1)
    assert rep.holds  # infeasible window for k = 4
    rep3 = pr.final_arithmetic(3, 3, 2, 1)
    assert not rep3.holds
    assert rep3.witness["feasible_d"] == 3
    rep10 = pr.final_arithmetic(10, 44, 1, 1)
    assert rep10.holds


def test_degree_window_feasibility_sweep():
    assert pr.degree_window_feasible(2) == 1
    assert pr.degree_window_feasible(3) == 3
    for k in range(4, 101):
        assert pr.degree_window_feasible(k) is None


# ---------------------------------------------------------------------------
# the full replay driver


def test_replay_petersen():
    res = pr.replay(petersen(), 3)
    assert res.status == "replayed"
    assert res.context["d"] == 3
    assert res.context["pattern_free_verified"] is True
    assert res.context["one_tough_verified"] is True
    by_id = {r.claim_id: r for r in res.reports}
    for cid in ("successor_set_independent", "u_non_neighbors_independent",
                "u_neighbor_degree_lower", "u_degree_upper", "h_degree_window",
                "consecutive_dominated_pair", "pair_neighborhood_bounds"):
        assert by_id[cid].holds, cid
    # k = 3 escapes the closing contradiction: petersen survives the argument
    assert not by_id["final_window_infeasible"].holds
    for r in res.reports:
        assert r.improvement is None and r.replacement is None


def test_replay_vacuous_and_acyclic():
    assert pr.replay(cycle_graph(5), 2).status == "hamiltonian"
    assert pr.replay(path_graph(5), 2).status == "acyclic"


def test_replay_context_failed_on_non_dominating_graph():
    # hexagon with a pendant 2-path: the chosen h has a neighbor off-cycle
    g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                  (6, 0), (7, 6)])
    res = pr.replay(g, 2)
    assert res.status == "context_failed"
    assert "off the cycle" in res.detail


def test_replay_soundness_random():
    # improvement constructions never fire on genuinely longest cycles
    rng = random.Random(2025)
    replayed = 0
    while replayed < 40:
        g = random_mask_graph(rng.randrange(5, 9), rng)
        if find_hamiltonian_cycle(g) is not None:
            continue
        res = pr.replay(g, 3, verify_hypotheses=False)
        if res.status != "replayed":
            continue
        replayed += 1
        for r in res.reports:
            assert r.improvement is None
            assert r.replacement is None
        assert {r.claim_id: r for r in res.reports}["successor_set_independent"].holds
