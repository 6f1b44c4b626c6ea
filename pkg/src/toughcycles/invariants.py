"""Exact graph invariants: toughness, vertex connectivity, independence
number and minimum degree, with witnesses.

Every comparison that can feed a verdict is done in exact integer or
Fraction arithmetic; no floating point is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels as K
from .errors import ResourceLimitError
from .graph import Graph, bits_list, component_count

EXHAUSTIVE_LIMIT = 24  # hard cap for the full 2^n toughness scan
DEFAULT_BUDGET = 50_000_000

# products |S| * t_den etc. must stay inside int64 inside the kernels
_T_KERNEL_BOUND = 1 << 20


@dataclass(frozen=True)
class ToughnessResult:
    """value is None exactly when the graph is complete (infinite toughness);
    otherwise witness_cut is a mask S with w(G-S) >= 2 and |S|/w = value."""

    value: Fraction | None
    witness_cut: int | None

    @property
    def is_infinite(self) -> bool:
        return self.value is None


def toughness(g: Graph, *, exhaustive_limit: int = EXHAUSTIVE_LIMIT,
              branch_and_bound: bool = False,
              budget: int = DEFAULT_BUDGET) -> ToughnessResult:
    """Minimum of |S|/w(G-S) over subsets with w(G-S) >= 2, exact.

    Uses the full subset scan up to ``exhaustive_limit`` vertices; beyond
    that, refuses unless ``branch_and_bound`` is set, in which case a
    size-ascending bounded search runs under a node budget.
    """
    if g.is_complete():
        return ToughnessResult(None, None)
    if g.n <= exhaustive_limit:
        num, den, cut = (int(x) for x in K.toughness_scan(g.rows_i64(), g.n))
    elif branch_and_bound:
        status, num, den, cut = (int(x) for x in K.toughness_bnb(g.rows_i64(), g.n, budget))
        if status != 0:
            raise ResourceLimitError(
                f"toughness branch-and-bound exceeded {budget} nodes at n={g.n}")
    else:
        raise ResourceLimitError(
            f"toughness scan refused for n={g.n} > {exhaustive_limit}; "
            "enable branch_and_bound")
    if num < 0:
        # unreachable for non-complete graphs, kept as a consistency guard
        return ToughnessResult(None, None)
    return ToughnessResult(Fraction(num, den), cut)


def is_t_tough(g: Graph, t, *, exhaustive_limit: int = EXHAUSTIVE_LIMIT,
               branch_and_bound: bool = False,
               budget: int = DEFAULT_BUDGET) -> tuple[bool, int | None]:
    """Exact t-toughness test; on failure also returns a violating cut mask
    S with w(G-S) >= 2 and |S| < t * w(G-S)."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if g.is_complete():
        return True, None
    if t == 0:
        return True, None
    # any qualifying S has |S| <= n-2 and w >= 2, so ratios never exceed n/2;
    # clamping keeps kernel arithmetic in range without changing the verdict
    t_eff = min(t, Fraction(g.n, 1))
    if g.n <= exhaustive_limit and t_eff.numerator <= _T_KERNEL_BOUND \
            and t_eff.denominator <= _T_KERNEL_BOUND:
        cut = int(K.tough_violation(g.rows_i64(), g.n, t_eff.numerator, t_eff.denominator))
        if cut < 0:
            return True, None
        return False, cut
    result = toughness(g, exhaustive_limit=exhaustive_limit,
                       branch_and_bound=branch_and_bound, budget=budget)
    if result.value >= t:
        return True, None
    return False, result.witness_cut


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity: unit-capacity max-flow with vertex
    splitting over all nonadjacent pairs; n-1 for complete graphs, 0 for
    disconnected graphs and for n <= 1."""
    if g.n <= 1:
        return 0
    return int(K.vertex_connectivity_flow(g.rows_i64(), g.n))


def is_k_connected(g: Graph, k: int) -> tuple[bool, int | None]:
    """Threshold connectivity test; on failure returns a separating set of
    size < k (or None when the graph is simply too small)."""
    if k <= 0:
        return True, None
    if g.n < k + 1:
        return False, None
    cut = int(K.find_small_cut(g.rows_i64(), g.n, k - 1))
    if cut < 0:
        return True, None
    return False, cut


def independence_number(g: Graph) -> tuple[int, int]:
    """(alpha, witness) where the witness is the lexicographically smallest
    maximum independent set, as a mask."""
    if g.n == 0:
        return 0, 0
    rows = g.rows_i64()
    alpha = int(K.alpha_max(rows, g.full_mask))
    if alpha == 0:
        return 0, 0
    witness = int(K.lex_min_independent_set(rows, g.full_mask, alpha))
    return alpha, witness


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree undefined on the empty graph")
    return min(g.degree(v) for v in range(g.n))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("maximum degree undefined on the empty graph")
    return max(g.degree(v) for v in range(g.n))


def format_rational(value: Fraction | None) -> str:
    """Render exactly as 'p/q', or 'inf' for the complete-graph case."""
    if value is None:
        return "inf"
    return f"{value.numerator}/{value.denominator}"


def describe_cut(g: Graph, cut: int) -> dict:
    return {
        "vertices": bits_list(cut),
        "components_after_removal": component_count(g, cut),
    }
