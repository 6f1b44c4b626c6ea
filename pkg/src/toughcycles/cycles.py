"""Exact hamiltonian-cycle and longest-cycle solvers, longest-cycle
enumeration, and edge-dominating checks.

Two independent routes solve hamiltonicity: a subset DP over endpoint
bitsets (default up to DP_LIMIT vertices) and the pruned longest-cycle
backtracker. Long searches take a cooperative node budget and raise
ResourceLimitError when it runs out.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _kernels as K
from .errors import ResourceLimitError
from .graph import Graph, bits_list, components, mask_of

DP_LIMIT = 24
BACKTRACK_LIMIT = 62
DEFAULT_BUDGET = 50_000_000


@dataclass(frozen=True)
class Cycle:
    """Simple cycle in canonical form: starts at its minimum vertex, and the
    second vertex is smaller than the last (fixing rotation and reflection)."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        v = self.vertices
        if len(v) < 3:
            raise ValueError("cycle needs at least 3 vertices")
        if len(set(v)) != len(v):
            raise ValueError("cycle vertices must be distinct")
        if v[0] != min(v) or v[1] > v[-1]:
            raise ValueError("cycle sequence not in canonical form")

    def __len__(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "Cycle":
        """Canonicalize an arbitrary rotation/orientation of a cycle."""
        seq = list(seq)
        if len(seq) < 3:
            raise ValueError("cycle needs at least 3 vertices")
        start = seq.index(min(seq))
        rot = seq[start:] + seq[:start]
        if rot[1] > rot[-1]:
            rot = [rot[0]] + rot[1:][::-1]
        return cls(tuple(rot))

    def mask(self) -> int:
        return mask_of(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def validate_cycle(g: Graph, c: Cycle) -> None:
    for u, v in c.edges():
        if not g.has_edge(u, v):
            raise ValueError(f"cycle uses non-edge ({u},{v})")


def is_valid_cycle(g: Graph, seq: Iterable[int]) -> bool:
    seq = list(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def find_hamiltonian_cycle(g: Graph, *, method: str = "auto",
                           budget: int = DEFAULT_BUDGET) -> Cycle | None:
    """Hamiltonian cycle, or None with an exhaustive proof of absence.

    method: 'dp' (endpoint-bitset subset DP), 'backtracking' (pruned DFS),
    or 'auto' (DP up to DP_LIMIT vertices, backtracking beyond).
    """
    n = g.n
    if n < 3:
        return None
    # cheap necessary conditions: minimum degree 2 and no cut of size <= 1
    if min(g.degree(v) for v in range(n)) < 2:
        return None
    if int(K.find_small_cut(g.rows_i64(), n, 1)) >= 0:
        return None
    if method == "auto":
        method = "dp" if n <= DP_LIMIT else "backtracking"
    if method == "dp":
        if n > DP_LIMIT:
            raise ResourceLimitError(f"subset DP refused for n={n} > {DP_LIMIT}")
        found, path = K.hamiltonian_cycle_dp(g.rows_i64(), n)
        if not found:
            return None
        return Cycle.from_sequence(int(x) for x in path)
    if method == "backtracking":
        c = find_longest_cycle(g, budget=budget)
        if c is not None and len(c) == n:
            return c
        return None
    raise ValueError(f"unknown method {method!r}")


def find_longest_cycle(g: Graph, *, budget: int = DEFAULT_BUDGET) -> Cycle | None:
    """A maximum-length cycle (exact), or None when the graph is acyclic."""
    if g.n < 3:
        return None
    if g.n > BACKTRACK_LIMIT:
        raise ResourceLimitError(f"longest-cycle search refused for n={g.n}")
    status, length, path = K.longest_cycle_search(g.rows_i64(), g.n, budget)
    if int(status) != 0:
        raise ResourceLimitError(f"longest-cycle search exceeded {budget} nodes")
    length = int(length)
    if length == 0:
        return None
    return Cycle.from_sequence(int(path[i]) for i in range(length))


def circumference(g: Graph, *, budget: int = DEFAULT_BUDGET) -> int:
    c = find_longest_cycle(g, budget=budget)
    return 0 if c is None else len(c)


def enumerate_longest_cycles(g: Graph, cap: int, *,
                             budget: int = DEFAULT_BUDGET) -> tuple[list[Cycle], bool]:
    """All distinct longest cycles in canonical form, up to ``cap``.

    Returns (cycles, truncated). Enumeration order is deterministic
    (lexicographic on the canonical vertex sequences).
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    longest = find_longest_cycle(g, budget=budget)
    if longest is None:
        return [], False
    length = len(longest)
    # grow the output buffer geometrically so small graphs stay cheap
    trial = min(cap, 128)
    while True:
        status, count, buf = K.cycles_of_length(g.rows_i64(), g.n, length, trial, budget)
        status = int(status)
        if status == 1:
            raise ResourceLimitError(f"cycle enumeration exceeded {budget} nodes")
        if status != 2 or trial >= cap:
            break
        trial = min(cap, trial * 8)
    out = [Cycle(tuple(int(x) for x in buf[i])) for i in range(int(count))]
    return out, status == 2


def is_edge_dominating(g: Graph, c: Cycle) -> tuple[bool, int | None]:
    """True iff every component of G minus the cycle is a single vertex;
    otherwise also returns an offending component mask."""
    validate_cycle(g, c)
    for comp in components(g, removed=c.mask()):
        if comp.bit_count() >= 2:
            return False, comp
    return True, None


def all_longest_cycles_edge_dominating(g: Graph, *, budget: int = DEFAULT_BUDGET
                                       ) -> tuple[bool, Cycle | None]:
    """Streamed check over every longest cycle; returns a violating cycle if
    one exists. Vacuously true on acyclic graphs; trivially true when the
    longest cycle misses at most one vertex."""
    longest = find_longest_cycle(g, budget=budget)
    if longest is None:
        return True, None
    length = len(longest)
    if length >= g.n - 1:
        return True, None
    status, found, path = K.find_non_dominating_cycle(g.rows_i64(), g.n, length, budget)
    if int(status) != 0:
        raise ResourceLimitError(f"edge-domination sweep exceeded {budget} nodes")
    if not bool(found):
        return True, None
    return False, Cycle(tuple(int(x) for x in path))
