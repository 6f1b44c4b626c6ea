"""Immutable simple graphs over 0..n-1 with bitmask adjacency rows.

Vertex sets are plain ints used as bitmasks (bit v set = vertex v in the
set), which keeps set algebra at word speed and makes every object in this
module a hashable immutable value, safe to share across workers.
"""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import Graph6Error

MAX_WORD_VERTICES = 62  # one signed 64-bit word per adjacency row in kernels


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate vertices of a mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def bits_list(mask: int) -> list[int]:
    return list(bits(mask))


class Graph:
    """Immutable simple undirected graph.

    ``rows[v]`` is the neighborhood of v as a bitmask; the relation is kept
    symmetric and irreflexive, and no row has bits at or above n.
    """

    __slots__ = ("n", "rows", "_rows64")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_rows64", None)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        """Build from adjacency masks, validating symmetry and irreflexivity."""
        rows = tuple(rows)
        n = len(rows)
        g = cls._unchecked(n, rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond n-1")
            if (row >> v) & 1:
                raise ValueError(f"row {v} is reflexive")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")
        return g

    @classmethod
    def _unchecked(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_rows64", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.rows[u] & ~((2 << u) - 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(self.rows[v] == full ^ (1 << v) for v in range(self.n))

    def relabel(self, perm: list[int]) -> "Graph":
        """New graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def rows_i64(self) -> np.ndarray:
        """Adjacency rows as an int64 array for the solver kernels (n <= 62)."""
        cached = self._rows64
        if cached is None:
            if self.n > MAX_WORD_VERTICES:
                raise ValueError(f"kernels support n <= {MAX_WORD_VERTICES}, got {self.n}")
            cached = np.array(self.rows, dtype=np.int64) if self.n else np.zeros(1, np.int64)
            object.__setattr__(self, "_rows64", cached)
        return cached


def neighborhood(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.rows[v]


def closed_neighborhood(g: Graph, v: int) -> int:
    return neighborhood(g, v) | (1 << v)


def set_neighborhood(g: Graph, s: int) -> int:
    """Union of neighborhoods of s, minus s itself."""
    if s & ~g.full_mask:
        raise ValueError("vertex set out of range")
    m = 0
    for v in bits(s):
        m |= g.rows[v]
    return m & ~s


def components(g: Graph, removed: int = 0) -> list[int]:
    """Connected components of g minus ``removed``, as masks, ascending by
    minimum vertex."""
    alive = g.full_mask & ~removed
    out = []
    while alive:
        seed = alive & -alive
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & alive & ~comp
            comp |= frontier
        out.append(comp)
        alive &= ~comp
    return out


def component_count(g: Graph, removed: int = 0) -> int:
    return len(components(g, removed))


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or component_count(g) == 1


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by mask ``s`` plus the new-index -> old-vertex map."""
    if s & ~g.full_mask:
        raise ValueError("vertex set out of range")
    old = bits_list(s)
    index = {v: i for i, v in enumerate(old)}
    rows = [0] * len(old)
    for i, v in enumerate(old):
        for u in bits(g.rows[v] & s):
            rows[i] |= 1 << index[u]
    return Graph._unchecked(len(old), tuple(rows)), tuple(old)


# ---------------------------------------------------------------------------
# graph6 interchange format


def _g6_read_n(data: bytes) -> tuple[int, int]:
    """Decode the leading vertex-count field, returning (n, bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    c = data[0]
    if c == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 vertex counts above 258047 not supported", 1)
        if len(data) < 4:
            raise Graph6Error("truncated long-form vertex count", len(data))
        vals = []
        for i in range(1, 4):
            if not 63 <= data[i] <= 126:
                raise Graph6Error(f"invalid graph6 byte {data[i]}", i)
            vals.append(data[i] - 63)
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        if n < 63:
            raise Graph6Error("long-form vertex count below 63", 1)
        return n, 4
    if not 63 <= c <= 125:
        raise Graph6Error(f"invalid graph6 header byte {c}", 0)
    return c - 63, 1


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 input is not ASCII") from exc
    n, off = _g6_read_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - off != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(data) - off}",
            off + min(nbytes, len(data) - off),
        )
    # column-major upper triangle: bit stream runs (0,1), (0,2), (1,2), (0,3)...
    bitpos = 0
    row_i = 0
    col = 1
    rows = [0] * n
    for bi in range(nbytes):
        c = data[off + bi]
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 byte {c}", off + bi)
        group = c - 63
        for j in range(5, -1, -1):
            bit = (group >> j) & 1
            if bitpos >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", off + bi)
            elif bit:
                rows[row_i] |= 1 << col
                rows[col] |= 1 << row_i
            bitpos += 1
            row_i += 1
            if row_i == col:
                row_i = 0
                col += 1
    return Graph._unchecked(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """Encode to graph6 (short form for n <= 62, long form up to 258047)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError("graph6 vertex counts above 258047 not supported")
    out = bytearray(head)
    group = 0
    nbits = 0
    for col in range(1, n):
        for i in range(col):
            group = (group << 1) | ((g.rows[i] >> col) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Convenience reader: 'n m' header, then m lines 'u v' (0-based)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad edge-list header: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = (int(tok) for tok in ln.split())
        except ValueError as exc:
            raise ValueError(f"bad edge line: {ln!r}") from exc
        edges.append((u, v))
    return Graph(n, edges)
