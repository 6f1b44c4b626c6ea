"""Executable form of the longest-cycle exchange argument for hamiltonicity
of tough pattern-free graphs.

Given a graph, a longest cycle C and an off-cycle vertex h of maximum
degree, this module builds the apparatus (the h-neighbors v_i in cycle
order, their successors u_i = v_i+, the set U) and checks each claim of the
argument. Whenever a claim fails and the corresponding rerouting applies,
the explicit replacement cycle is constructed and validated, so fixtures
with deliberately non-longest cycles produce certified longer cycles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cycles import Cycle, enumerate_longest_cycles, find_longest_cycle, is_valid_cycle
from .errors import ResourceLimitError
from .graph import Graph, bits, bits_list, mask_of, set_neighborhood
from .structure import FreenessWitness, witness_is_valid


@dataclass(frozen=True, eq=False)
class ProofContext:
    """The exchange-argument apparatus for one (graph, cycle, h, k) tuple.

    v, u, w are 0-indexed tuples of the paper-style 1-based families:
    v[i] is the (i+1)-th neighbor of h along the cycle orientation,
    u[i] its successor, w[i] the predecessor of the next neighbor.
    """

    g: Graph
    cycle: Cycle
    h: int
    k: int
    d: int
    v: tuple[int, ...]
    u: tuple[int, ...]
    w: tuple[int, ...]
    u_mask: int
    n_g_u: int  # N_G(U): neighbors of U outside U
    _pos: dict = field(repr=False)

    def position(self, x: int) -> int:
        return self._pos[x]

    def successor(self, x: int) -> int:
        verts = self.cycle.vertices
        return verts[(self._pos[x] + 1) % len(verts)]

    def predecessor(self, x: int) -> int:
        verts = self.cycle.vertices
        return verts[(self._pos[x] - 1) % len(verts)]

    def forward(self, a: int, b: int) -> list[int]:
        """Cycle vertices from a to b inclusive, along the orientation."""
        verts = self.cycle.vertices
        L = len(verts)
        i = self._pos[a]
        out = [a]
        while verts[i] != b:
            i = (i + 1) % L
            out.append(verts[i])
        return out

    def backward(self, a: int, b: int) -> list[int]:
        """Cycle vertices from a to b inclusive, against the orientation."""
        return list(reversed(self.forward(b, a)))

    def rotate(self, shift: int) -> "ProofContext":
        """Cyclically relabel the neighbor families: new v[i] = v[i+shift]."""
        shift %= self.d
        if shift == 0:
            return self

        def rot(t):
            return t[shift:] + t[:shift]

        return ProofContext(self.g, self.cycle, self.h, self.k, self.d,
                            rot(self.v), rot(self.u), rot(self.w),
                            self.u_mask, self.n_g_u, self._pos)

    def segment_of(self, x: int) -> int:
        """0-based index i such that x lies in the open segment after v[i]
        (i.e. between u[i] and w[i] inclusive). x must be on the cycle and
        neither an h-neighbor nor in U."""
        L = len(self.cycle.vertices)
        p = self._pos[x]
        vpos = {self._pos[vi]: i for i, vi in enumerate(self.v)}
        for back in range(1, L + 1):
            q = (p - back) % L
            if q in vpos:
                return vpos[q]
        raise ValueError("no h-neighbor on the cycle")


def build_context(g: Graph, c: Cycle, h: int, k: int) -> ProofContext:
    """Assemble the apparatus. The cycle is taken as longest on the caller's
    word; h must be off the cycle with every neighbor on it and d >= 1."""
    if not 0 <= h < g.n:
        raise ValueError(f"vertex {h} out of range")
    for a, b in c.edges():
        if not g.has_edge(a, b):
            raise ValueError(f"cycle uses non-edge ({a},{b})")
    cmask = c.mask()
    if (cmask >> h) & 1:
        raise ValueError(f"h={h} lies on the cycle")
    nh = g.rows[h]
    if nh & ~cmask:
        off = bits_list(nh & ~cmask)
        raise ValueError(
            f"h={h} has neighbors off the cycle {off}; "
            "the cycle is not edge-dominating, the apparatus does not apply")
    d = nh.bit_count()
    if d < 1:
        raise ValueError(f"h={h} has no neighbors")
    if k < 1:
        raise ValueError("k must be >= 1")
    pos = {x: i for i, x in enumerate(c.vertices)}
    v = tuple(sorted(bits_list(nh), key=lambda x: pos[x]))
    L = len(c.vertices)
    u = tuple(c.vertices[(pos[vi] + 1) % L] for vi in v)
    w = tuple(c.vertices[(pos[v[(i + 1) % d]] - 1) % L] for i in range(d))
    u_mask = mask_of(u)
    n_g_u = set_neighborhood(g, u_mask)
    return ProofContext(g, c, h, k, d, v, u, w, u_mask, n_g_u, pos)


def choose_cycle_and_h(g: Graph, *, cap: int = 200_000,
                       budget: int = 50_000_000) -> tuple[Cycle, int] | None:
    """Longest cycle plus off-cycle vertex maximizing the vertex's degree.

    Ties break by canonical cycle enumeration order, then minimum vertex.
    Returns None when the graph is hamiltonian or acyclic.
    """
    longest = find_longest_cycle(g, budget=budget)
    if longest is None or len(longest) == g.n:
        return None
    all_longest, truncated = enumerate_longest_cycles(g, cap, budget=budget)
    if truncated:
        raise ResourceLimitError(f"more than {cap} longest cycles")
    best = None
    for c in all_longest:
        off = g.full_mask & ~c.mask()
        for x in bits(off):
            dx = g.degree(x)
            if best is None or dx > best[0]:
                best = (dx, c, x)
    assert best is not None
    return best[1], best[2]


@dataclass
class Replacement:
    """Equal-length cycle exposing an off-cycle vertex of larger degree."""

    cycle: Cycle
    exposed: int


@dataclass
class ClaimReport:
    claim_id: str
    holds: bool
    checked: tuple[str, ...] = ()
    witness: dict = field(default_factory=dict)
    improvement: Cycle | None = None
    replacement: Replacement | None = None

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim_id,
            "holds": self.holds,
            "checked_preconditions": list(self.checked),
            "witness": self.witness,
        }
        if self.improvement is not None:
            out["improvement_cycle"] = list(self.improvement.vertices)
        if self.replacement is not None:
            out["replacement_cycle"] = list(self.replacement.cycle.vertices)
            out["replacement_exposed_vertex"] = self.replacement.exposed
        return out


def _try_cycle(g: Graph, seq: list[int]) -> Cycle | None:
    if is_valid_cycle(g, seq):
        return Cycle.from_sequence(seq)
    return None


def claim_u_independent(ctx: ProofContext) -> ClaimReport:
    """U + {h} is independent whenever the cycle is genuinely longest; any
    offending edge yields the standard rerouted cycle, one vertex longer."""
    g = ctx.g
    bad_edges = []
    improvement = None
    for i, ui in enumerate(ctx.u):
        if g.has_edge(ctx.h, ui):
            bad_edges.append((ctx.h, ui))
            if improvement is None:
                seq = [ctx.h] + ctx.backward(ctx.v[i], ui)
                cand = _try_cycle(g, seq)
                if cand is not None and len(cand) > len(ctx.cycle):
                    improvement = cand
    for i in range(ctx.d):
        for j in range(i + 1, ctx.d):
            if g.has_edge(ctx.u[i], ctx.u[j]):
                bad_edges.append((ctx.u[i], ctx.u[j]))
                if improvement is None:
                    seq = ([ctx.h] + ctx.backward(ctx.v[i], ctx.u[j])
                           + ctx.forward(ctx.u[i], ctx.v[j]))
                    cand = _try_cycle(g, seq)
                    if cand is not None and len(cand) > len(ctx.cycle):
                        improvement = cand
    return ClaimReport(
        "successor_set_independent",
        holds=not bad_edges,
        checked=("cycle_valid", "h_off_cycle", "h_neighbors_on_cycle"),
        witness={"offending_edges": [list(e) for e in bad_edges]} if bad_edges else {},
        improvement=improvement,
    )


def claim_nonneighbors_independent(ctx: ProofContext, *,
                                   freeness_verified: bool | None = None,
                                   toughness_verified: bool | None = None) -> ClaimReport:
    """Three sub-assertions: V - N(U) is independent, N(U) covers at least
    half the vertices, and N(U) stays on the cycle."""
    g = ctx.g
    k = ctx.k
    witness: dict = {}
    nd = g.full_mask & ~ctx.n_g_u  # V minus N(U); note U itself lies in here
    edge = None
    for x in bits(nd):
        m = g.rows[x] & nd & ~((2 << x) - 1)
        if m:
            edge = (x, next(bits(m)))
            break
    independent_ok = edge is None
    if edge is not None:
        witness["offending_edge"] = list(edge)
        if ctx.d >= k:
            iso = mask_of(ctx.u[:k])
            fw = FreenessWitness(edge, iso)
            if witness_is_valid(g, k, fw):
                witness["forbidden_pattern"] = fw.vertices()
    half_ok = 2 * ctx.n_g_u.bit_count() >= g.n
    if not half_ok:
        witness["n_g_u_size"] = ctx.n_g_u.bit_count()
        witness["order"] = g.n
        if independent_ok:
            # an independent set covering more than half the graph refutes
            # 1-toughness
            witness["large_independent_set"] = bits_list(nd)
    off_cycle = ctx.n_g_u & ~ctx.cycle.mask()
    on_cycle_ok = off_cycle == 0
    if not on_cycle_ok:
        y = next(bits(off_cycle))
        witness["off_cycle_neighbor"] = y
        yu = g.rows[y] & ctx.u_mask
        if yu.bit_count() == 1 and ctx.d >= k:
            ui = next(bits(yu))
            others = [x for x in ctx.u if x != ui][:k - 1]
            fw = FreenessWitness((y, ui), mask_of([ctx.h] + others))
            if witness_is_valid(g, k, fw):
                witness["forbidden_pattern"] = fw.vertices()
    checked = ["successor_set_independent_assumed"]
    if freeness_verified is not None:
        checked.append("freeness_verified" if freeness_verified else "freeness_failed")
    if toughness_verified is not None:
        checked.append("1_tough_verified" if toughness_verified else "1_tough_failed")
    witness["sub_assertions"] = {
        "non_neighbors_independent": independent_ok,
        "neighbors_cover_half": half_ok,
        "neighbors_on_cycle": on_cycle_ok,
    }
    return ClaimReport(
        "u_non_neighbors_independent",
        holds=independent_ok and half_ok and on_cycle_ok,
        checked=tuple(checked),
        witness=witness,
    )


def edge_count_u_to_neighbors(ctx: ProofContext) -> int:
    """e(U, N(U)) counted by a direct double loop."""
    g = ctx.g
    return sum(1 for ui in ctx.u for y in bits(ctx.n_g_u) if g.has_edge(ui, y))


def claim_neighbor_degree_lower(ctx: ProofContext) -> ClaimReport:
    """Every y in N(U) sees at least d-k+1 vertices of U (d-k+2 when y is not
    an h-neighbor), and in aggregate e(U, N(U)) >= (d-k+2)|N(U)| - d."""
    g = ctx.g
    d, k = ctx.d, ctx.k
    failures = []
    for y in bits(ctx.n_g_u):
        threshold = d - k + 1 if g.has_edge(ctx.h, y) else d - k + 2
        c = (g.rows[y] & ctx.u_mask).bit_count()
        if c < threshold:
            failures.append({"vertex": y, "overlap": c, "required": threshold})
    e = edge_count_u_to_neighbors(ctx)
    size_ngu = ctx.n_g_u.bit_count()
    aggregate_ok = e >= (d - k + 2) * size_ngu - d
    # chained form against the graph order, exact rational comparison
    chained_ok = 2 * e >= (d - k + 2) * g.n - 2 * d
    witness = {
        "edge_count": e,
        "n_g_u_size": size_ngu,
        "aggregate_lower_bound": (d - k + 2) * size_ngu - d,
        "order_lower_bound_holds": chained_ok,
    }
    if failures:
        witness["per_vertex_failures"] = failures
    return ClaimReport(
        "u_neighbor_degree_lower",
        holds=not failures and aggregate_ok,
        checked=("freeness_required_for_guarantee",),
        witness=witness,
    )


def claim_u_degree_upper(ctx: ProofContext) -> ClaimReport:
    """deg(u_i) <= d for every successor u_i; a violation reroutes the cycle
    to an equal-length one avoiding u_i, exposing a higher-degree off-cycle
    vertex and contradicting the maximal choice of (C, h)."""
    g = ctx.g
    d = ctx.d
    violations = []
    replacement = None
    for i, ui in enumerate(ctx.u):
        du = g.degree(ui)
        if du <= d:
            continue
        entry = {"u_index": i + 1, "vertex": ui, "degree": du, "bound": d}
        if replacement is None:
            up = ctx.successor(ui)
            cand = None
            if g.has_edge(ctx.h, up):
                # successor of u_i is the next h-neighbor: bypass u_i directly
                seq = ctx.backward(ctx.v[i], up) + [ctx.h]
                cand = _try_cycle(g, seq)
            else:
                for j, uj in enumerate(ctx.u):
                    if j != i and g.has_edge(uj, up):
                        seq = (ctx.backward(ctx.v[i], uj) + ctx.forward(up, ctx.v[j])
                               + [ctx.h])
                        cand = _try_cycle(g, seq)
                        if cand is not None:
                            entry["via_u_index"] = j + 1
                            break
            if cand is not None and len(cand) == len(ctx.cycle):
                replacement = Replacement(cand, ui)
                entry["replacement"] = list(cand.vertices)
        violations.append(entry)
    e = edge_count_u_to_neighbors(ctx)
    square_ok = e <= d * d
    witness = {"edge_count": e, "square_bound": d * d}
    if violations:
        witness["degree_violations"] = violations
    return ClaimReport(
        "u_degree_upper",
        holds=not violations and square_ok,
        checked=("maximal_choice_of_cycle_and_h_assumed",),
        witness=witness,
        replacement=replacement,
    )


def order_upper_bound(d: int, k: int) -> Fraction:
    """2d(d+1)/(d-k+2): the order bound forced by the aggregate edge-count
    inequalities. Undefined at d = k-2."""
    if d == k - 2:
        raise ValueError("order bound undefined at d = k-2 (zero denominator)")
    return Fraction(2 * d * (d + 1), d - k + 2)


def claim_h_degree_lower_bound(ctx: ProofContext) -> ClaimReport:
    """2d > k^2 - k - 2: otherwise the order bound caps |V| at k^2 + k,
    contradicting the order floor k^2 + k + 1."""
    g = ctx.g
    d, k = ctx.d, ctx.k
    window_hi2 = k * k - k - 2  # always even, so the window cap is integral
    holds = 2 * d > window_hi2
    applicable = g.n >= k * k + k + 1
    witness = {
        "d": d,
        "window": [k, window_hi2 // 2],
        "order": g.n,
        "order_floor": k * k + k + 1,
        "order_floor_met": applicable,
        "max_order_bound": k * k + k,
    }
    if d != k - 2:
        bound = order_upper_bound(d, k)
        witness["order_bound_at_d"] = f"{bound.numerator}/{bound.denominator}"
        if k <= d and 2 * d <= window_hi2:
            witness["order_within_bound"] = Fraction(g.n) <= bound
    checked = ("order_floor_checked",) if applicable else ("order_floor_not_met",)
    return ClaimReport("h_degree_window", holds=holds, checked=checked, witness=witness)


@dataclass(frozen=True)
class ConsecutivePair:
    """A vertex x with both x and its successor dominated by U, plus the
    extreme 1-based indices l (min i with u_i ~ x) and r (max i with
    u_i ~ x+), computed after rotating x into the last segment."""

    x: int
    l_index: int
    r_index: int
    rotation: int


def consecutive_pair_at(ctx: ProofContext, x: int) -> ConsecutivePair:
    """Build the normalized pair for a given x (x and x+ must lie in N(U))."""
    g = ctx.g
    if not ((ctx.n_g_u >> x) & 1):
        raise ValueError(f"x={x} is not dominated by U")
    xp = ctx.successor(x)
    if not ((ctx.n_g_u >> xp) & 1):
        raise ValueError(f"successor of x={x} is not dominated by U")
    if g.has_edge(ctx.h, x):
        raise ValueError(f"x={x} is a neighbor of h")
    seg = ctx.segment_of(x)
    rotation = (seg + 1) % ctx.d
    rctx = ctx.rotate(rotation)
    l_index = min(i + 1 for i, ui in enumerate(rctx.u) if g.has_edge(ui, x))
    r_index = max(i + 1 for i, ui in enumerate(rctx.u) if g.has_edge(ui, xp))
    return ConsecutivePair(x, l_index, r_index, rotation)


def find_consecutive_pair(ctx: ProofContext) -> ConsecutivePair | None:
    """First x along the orientation with {x, x+} inside N(U); None when the
    cycle alternates between N(U) and its complement."""
    ngu = ctx.n_g_u
    for x in ctx.cycle.vertices:
        if (ngu >> x) & 1 and (ngu >> ctx.successor(x)) & 1:
            return consecutive_pair_at(ctx, x)
    return None


def claim_consecutive_pair(ctx: ProofContext) -> tuple[ClaimReport, ConsecutivePair | None]:
    """Report wrapper: a missing pair means the cycle alternates, forcing
    more than half the graph outside N(U), refuting 1-toughness."""
    pair = find_consecutive_pair(ctx)
    if pair is not None:
        witness = {"x": pair.x, "l": pair.l_index, "r": pair.r_index,
                   "rotation": pair.rotation,
                   "x_not_adjacent_h": not ctx.g.has_edge(ctx.h, pair.x)}
        return ClaimReport("consecutive_dominated_pair", True,
                           checked=("successor_set_independent_assumed",),
                           witness=witness), pair
    outside = ctx.g.n - ctx.n_g_u.bit_count()
    witness = {
        "alternating": True,
        "outside_n_g_u": outside,
        "order": ctx.g.n,
        "outside_exceeds_half": 2 * outside > ctx.g.n,
    }
    return ClaimReport("consecutive_dominated_pair", False,
                       checked=("successor_set_independent_assumed",),
                       witness=witness), None


def claim_pair_neighborhood_bounds(ctx: ProofContext, pair: ConsecutivePair) -> ClaimReport:
    """Index-range and size bounds for N(x) & U, N(x+) & U and the successor
    of u_l; each of the four rerouting situations yields its explicit longer
    cycle when its precondition holds."""
    g = ctx.g
    rctx = ctx.rotate(pair.rotation)
    d, k = rctx.d, rctx.k
    x = pair.x
    xp = rctx.successor(x)
    l, r = pair.l_index, pair.r_index
    ix = sorted(i + 1 for i, ui in enumerate(rctx.u) if g.has_edge(ui, x))
    ixp = sorted(i + 1 for i, ui in enumerate(rctx.u) if g.has_edge(ui, xp))
    u_l = rctx.u[l - 1]
    u_r = rctx.u[r - 1]
    y = rctx.successor(u_l)  # the paper's u_l+
    improvements: list[Cycle] = []
    witness: dict = {"x": x, "x_successor": xp, "l": l, "r": r,
                     "n_x_indices": ix, "n_x_successor_indices": ixp}

    crossing = l < r
    if crossing:
        seq = ([x] + rctx.forward(u_l, rctx.v[r - 1]) + [rctx.h]
               + rctx.backward(rctx.v[l - 1], xp) + rctx.forward(u_r, x)[:-1])
        cand = _try_cycle(g, seq)
        if cand is not None and len(cand) > len(ctx.cycle):
            improvements.append(cand)
            witness["crossing_improvement"] = list(cand.vertices)

    y_adj_h = g.has_edge(rctx.h, y)
    if y_adj_h and not crossing:
        seq = ([rctx.h] + rctx.backward(rctx.v[r - 1], xp)
               + rctx.forward(u_r, u_l) + rctx.backward(x, y))
        cand = _try_cycle(g, seq)
        if cand is not None and len(cand) > len(ctx.cycle):
            improvements.append(cand)
            witness["h_successor_improvement"] = list(cand.vertices)

    iy = sorted(i + 1 for i, ui in enumerate(rctx.u) if g.has_edge(ui, y))
    stray = [j for j in iy if not (r <= j <= l)]
    if not crossing and not y_adj_h:
        for j in stray:
            uj = rctx.u[j - 1]
            if j <= r - 1:
                seq = ([rctx.h] + rctx.backward(rctx.v[j - 1], xp)
                       + rctx.forward(u_r, u_l) + rctx.backward(x, y)
                       + rctx.forward(uj, rctx.v[r - 1]))
            elif j >= l + 1:
                seq = ([rctx.h] + rctx.backward(rctx.v[r - 1], xp)
                       + rctx.forward(u_r, u_l) + rctx.backward(x, uj)
                       + rctx.forward(y, rctx.v[j - 1]))
            else:
                continue
            cand = _try_cycle(g, seq)
            if cand is not None and len(cand) > len(ctx.cycle):
                improvements.append(cand)
                witness.setdefault("stray_improvements", []).append(
                    {"j": j, "cycle": list(cand.vertices)})

    size_x_ok = len(ix) >= d - k + 2
    size_xp_ok = len(ixp) >= d - k + 1
    size_y_ok = len(iy) >= d - k + 2
    containment_ok = not crossing and not stray
    witness["u_l_successor"] = y
    witness["u_l_successor_adjacent_h"] = y_adj_h
    witness["u_l_successor_indices"] = iy
    witness["size_bounds"] = {
        "n_x": [len(ix), d - k + 2, size_x_ok],
        "n_x_successor": [len(ixp), d - k + 1, size_xp_ok],
        "n_u_l_successor": [len(iy), d - k + 2, size_y_ok],
    }
    if crossing:
        witness["crossing"] = True
    if stray:
        witness["stray_indices"] = stray
    holds = (containment_ok and not y_adj_h
             and size_x_ok and size_xp_ok and size_y_ok)
    return ClaimReport(
        "pair_neighborhood_bounds",
        holds=holds,
        checked=("freeness_required_for_size_bounds",
                 "successor_set_independent_assumed"),
        witness=witness,
        improvement=improvements[0] if improvements else None,
    )


def degree_window_feasible(k: int) -> int | None:
    """Smallest integer d with 2d > k^2-k-2 and 2d <= 3k-3, or None.

    Nonempty only for k < 2 + sqrt(3), checked exactly as (k-2)^2 <= 3."""
    if k < 2:
        raise ValueError("k must be >= 2")
    d = (k * k - k - 2) // 2 + 1
    if 2 * d <= 3 * k - 3:
        return d
    return None


def final_arithmetic(k: int, d: int, l_x: int, r_x: int) -> ClaimReport:
    """Closing arithmetic: the index bounds force 2d <= 3k-3, which together
    with 2d > k^2-k-2 is infeasible for every integer k >= 4."""
    if k < 2:
        raise ValueError("k must be >= 2")
    feasible_d = degree_window_feasible(k)
    ineqs = {
        "l_at_most_k_minus_1": l_x <= k - 1,
        "r_at_least_d_minus_k_plus_1": r_x >= d - k + 1,
        "gap_lower": d - k + 1 <= l_x - r_x,
        "gap_upper": l_x - r_x <= 2 * k - d - 2,
        "d_at_most_3k_minus_3_halves": 2 * d <= 3 * k - 3,
        "d_exceeds_window": 2 * d > k * k - k - 2,
    }
    infeasible = feasible_d is None
    # the closing real-number comparison, in exact integer form
    assert ((k - 2) ** 2 > 3) <= infeasible
    witness = {
        "inequalities": ineqs,
        "window_infeasible": infeasible,
        "feasible_d": feasible_d,
        "k_minus_2_squared_exceeds_3": (k - 2) ** 2 > 3,
    }
    return ClaimReport("final_window_infeasible", holds=infeasible, witness=witness)


@dataclass
class ReplayResult:
    status: str  # hamiltonian | acyclic | context_failed | replayed
    detail: str = ""
    context: dict = field(default_factory=dict)
    reports: list[ClaimReport] = field(default_factory=list)
    hamiltonian_cycle: Cycle | None = None

    def to_dict(self) -> dict:
        out = {"status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.hamiltonian_cycle is not None:
            out["hamiltonian_cycle"] = list(self.hamiltonian_cycle.vertices)
        if self.context:
            out["context"] = self.context
        if self.reports:
            out["claims"] = [r.to_dict() for r in self.reports]
        return out


def replay(g: Graph, k: int, *, budget: int = 50_000_000,
           verify_hypotheses: bool = True) -> ReplayResult:
    """Full claim-by-claim replay of the exchange argument on one graph."""
    from .cycles import find_hamiltonian_cycle
    from .invariants import is_t_tough
    from .structure import is_p2_kp1_free

    if k < 2:
        raise ValueError("replay needs k >= 2")
    ham = find_hamiltonian_cycle(g, budget=budget)
    if ham is not None:
        return ReplayResult("hamiltonian", "graph is hamiltonian; replay is vacuous",
                            hamiltonian_cycle=ham)
    chosen = choose_cycle_and_h(g, budget=budget)
    if chosen is None:
        return ReplayResult("acyclic", "no cycle exists; nothing to replay")
    c, h = chosen
    freeness_ok = toughness_ok = None
    if verify_hypotheses:
        freeness_ok, _ = is_p2_kp1_free(g, k)
        toughness_ok, _ = is_t_tough(g, 1)
    try:
        ctx = build_context(g, c, h, k)
    except ValueError as exc:
        return ReplayResult("context_failed", str(exc),
                            context={"cycle": list(c.vertices), "h": h})
    reports = [
        claim_u_independent(ctx),
        claim_nonneighbors_independent(ctx, freeness_verified=freeness_ok,
                                       toughness_verified=toughness_ok),
        claim_neighbor_degree_lower(ctx),
        claim_u_degree_upper(ctx),
        claim_h_degree_lower_bound(ctx),
    ]
    pair_report, pair = claim_consecutive_pair(ctx)
    reports.append(pair_report)
    if pair is not None:
        reports.append(claim_pair_neighborhood_bounds(ctx, pair))
        reports.append(final_arithmetic(k, ctx.d, pair.l_index, pair.r_index))
    context = {
        "cycle": list(c.vertices),
        "cycle_length": len(c),
        "h": h,
        "d": ctx.d,
        "k": k,
        "v_order": list(ctx.v),
        "u_set": sorted(ctx.u),
        "n_g_u": bits_list(ctx.n_g_u),
        "edge_count_u_to_neighbors": edge_count_u_to_neighbors(ctx),
        "index_convention": "families are reported 1-based, matching l/r",
    }
    if freeness_ok is not None:
        context["pattern_free_verified"] = freeness_ok
    if toughness_ok is not None:
        context["one_tough_verified"] = toughness_ok
    return ReplayResult("replayed", context=context, reports=reports)
