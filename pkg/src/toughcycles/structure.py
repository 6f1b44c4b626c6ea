"""Forbidden-induced-subgraph detection for the one-edge-plus-k-isolated
pattern, the independent-set neighborhood property it forces, and Petersen
recognition."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _kernels as K
from .graph import Graph, bits, bits_list, mask_of
from .generators import petersen


@dataclass(frozen=True)
class FreenessWitness:
    """An induced copy of the pattern: edge xy plus k pairwise nonadjacent
    vertices with no edges to x or y."""

    edge: tuple[int, int]
    isolated_part: int  # mask of the k isolated vertices

    def vertices(self) -> list[int]:
        return sorted([*self.edge, *bits_list(self.isolated_part)])


def witness_is_valid(g: Graph, k: int, w: FreenessWitness) -> bool:
    """Re-validate a witness directly against the adjacency."""
    x, y = w.edge
    if not g.has_edge(x, y):
        return False
    iso = w.isolated_part
    if iso.bit_count() != k or iso & ((1 << x) | (1 << y)):
        return False
    if (g.rows[x] | g.rows[y]) & iso:
        return False
    return all((g.rows[v] & iso) == 0 for v in bits(iso))


def is_p2_kp1_free(g: Graph, k: int) -> tuple[bool, FreenessWitness | None]:
    """True iff no edge leaves k independent undominated vertices.

    Iterates edges and tests the undominated remainder for an independent
    k-set; the witness, when present, is the lexicographically first edge
    with the lex-min independent k-set in its remainder.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n == 0:
        return True, None
    rows = g.rows_i64()
    packed = int(K.p2kp1_violating_edge(rows, g.n, k))
    if packed < 0:
        return True, None
    x, y = divmod(packed, 64)
    region = g.full_mask & ~(g.rows[x] | g.rows[y] | (1 << x) | (1 << y))
    iso = int(K.lex_min_independent_set(rows, region, k))
    witness = FreenessWitness((x, y), iso)
    assert witness_is_valid(g, k, witness)
    return False, witness


def is_p2_kp1_free_naive(g: Graph, k: int) -> bool:
    """Oracle route: enumerate all (k+2)-subsets and check the induced
    degree profile (exactly one edge, k isolated vertices)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n < k + 2:
        return True
    if g.n <= 14:
        return int(K.p2kp1_contains_naive(g.rows_i64(), g.n, k)) == 0
    for combo in combinations(range(g.n), k + 2):
        sub = mask_of(combo)
        degs = sorted((g.rows[v] & sub).bit_count() for v in combo)
        if degs == [0] * k + [1, 1]:
            return False
    return True


@dataclass(frozen=True)
class LemmaViolation:
    vertex: int
    independent_set: int  # mask
    overlap: int
    required: int

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "independent_set": bits_list(self.independent_set),
            "overlap": self.overlap,
            "required": self.required,
        }


def check_lemma_2_3(g: Graph, k: int) -> list[LemmaViolation]:
    """All (v, X) pairs where X is independent, N(v) meets X, and
    |N(v) & X| < |X| - k + 1.

    For n <= 12 every independent set is checked; beyond that only maximal
    independent sets are enumerated. A pattern-free graph must yield no
    violations.
    """
    if g.n == 0:
        return []
    if g.n <= 12:
        v0, _ = K.lemma_first_violation(g.rows_i64(), g.n, k)
        if int(v0) < 0:
            return []
        independent_sets = _all_independent_masks(g)
    else:
        independent_sets = _maximal_independent_masks(g)
    out = []
    for x_mask in independent_sets:
        need = x_mask.bit_count() - k + 1
        if need <= 1:
            continue
        for v in range(g.n):
            if (x_mask >> v) & 1:
                continue
            c = (g.rows[v] & x_mask).bit_count()
            if c != 0 and c < need:
                out.append(LemmaViolation(v, x_mask, c, need))
    return out


def _all_independent_masks(g: Graph) -> list[int]:
    out = []
    for mask in range(1, 1 << g.n):
        if all((g.rows[v] & mask) == 0 for v in bits(mask)):
            out.append(mask)
    return out


def _maximal_independent_masks(g: Graph) -> list[int]:
    """Bron-Kerbosch with pivoting on the complement adjacency."""
    full = g.full_mask
    comp = [full & ~(g.rows[v] | (1 << v)) for v in range(g.n)]
    out = []

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        pivot = (px & -px).bit_length() - 1
        best = -1
        for u in bits(px):
            c = (comp[u] & p).bit_count()
            if c > best:
                best = c
                pivot = u
        for v in bits(p & ~comp[pivot]):
            vb = 1 << v
            expand(r | vb, p & comp[v], x & comp[v])
            p &= ~vb
            x |= vb

    if g.n:
        expand(0, full, 0)
    return sorted(out)


_PETERSEN = petersen()


def is_petersen(g: Graph) -> bool:
    """Petersen recognition: cheap invariant filter (order, 3-regularity,
    girth 5) followed by an explicit isomorphism search against the
    reference adjacency."""
    if g.n != 10 or g.edge_count() != 15:
        return False
    if any(g.degree(v) != 3 for v in range(10)):
        return False
    # girth 5: triangle-free and square-free
    for u, v in g.edges():
        if g.rows[u] & g.rows[v]:
            return False
    for u in range(10):
        for v in range(u + 1, 10):
            if not g.has_edge(u, v) and (g.rows[u] & g.rows[v]).bit_count() > 1:
                return False
    return _isomorphic_to(g, _PETERSEN)


def _isomorphic_to(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism search mapping h's vertices into g."""
    n = g.n
    mapping = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        hrow = h.rows[i]
        for cand in range(n):
            if used[cand]:
                continue
            ok = True
            for j in range(i):
                want = (hrow >> j) & 1
                have = (g.rows[cand] >> mapping[j]) & 1
                if want != have:
                    ok = False
                    break
            if ok:
                mapping[i] = cand
                used[cand] = True
                if place(i + 1):
                    return True
                used[cand] = False
                mapping[i] = -1
        return False

    return place(0)
