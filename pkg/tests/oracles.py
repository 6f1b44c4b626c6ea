"""Deliberately naive reference implementations used as test oracles.

Everything here works on plain python data structures (dicts, sets,
itertools), independent of the library's bitset kernels, so agreement is a
genuine two-route check and not a tautology.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from toughcycles.graph import Graph


def adjacency_sets(g: Graph) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def component_count_naive(g: Graph, removed: set[int]) -> int:
    adj = adjacency_sets(g)
    todo = set(range(g.n)) - removed
    count = 0
    while todo:
        count += 1
        stack = [todo.pop()]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in todo:
                    todo.remove(y)
                    stack.append(y)
    return count


def toughness_bruteforce(g: Graph) -> Fraction | None:
    """Full 2^n enumeration with no pruning; None means complete graph."""
    best = None
    for r in range(g.n + 1):
        for cut in combinations(range(g.n), r):
            w = component_count_naive(g, set(cut))
            if w >= 2:
                ratio = Fraction(len(cut), w)
                if best is None or ratio < best:
                    best = ratio
    return best


def alpha_bruteforce(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(size, lexicographically smallest maximum independent set)."""
    adj = adjacency_sets(g)
    best = 0
    best_set: tuple[int, ...] = ()
    for r in range(g.n, 0, -1):
        found = None
        for combo in combinations(range(g.n), r):
            s = set(combo)
            if all(not (adj[v] & s) for v in combo):
                found = combo
                break
        if found is not None:
            best, best_set = r, found
            break
    return best, best_set


def connectivity_bruteforce(g: Graph) -> int:
    """Smallest cut size by direct enumeration; n-1 for complete graphs."""
    n = g.n
    if n <= 1:
        return 0
    if g.edge_count() == n * (n - 1) // 2:
        return n - 1
    for r in range(n - 1):
        for cut in combinations(range(n), r):
            if component_count_naive(g, set(cut)) >= 2:
                return r
    return n - 1


def contains_p2_kp1_naive(g: Graph, k: int) -> bool:
    """Check all (k+2)-subsets for an induced one-edge-plus-k-isolated copy."""
    adj = adjacency_sets(g)
    for combo in combinations(range(g.n), k + 2):
        s = set(combo)
        degs = sorted(len(adj[v] & s) for v in combo)
        if degs == [0] * k + [1, 1]:
            return True
    return False


def cycles_of_length_naive(g: Graph, length: int) -> set[tuple[int, ...]]:
    """All cycles of the given length as canonical tuples, by plain DFS."""
    adj = adjacency_sets(g)
    out: set[tuple[int, ...]] = set()

    def extend(path: list[int]):
        if len(path) == length:
            if path[0] in adj[path[-1]] and path[1] < path[-1]:
                out.add(tuple(path))
            return
        for y in sorted(adj[path[-1]]):
            if y > path[0] and y not in path:
                extend(path + [y])

    for s in range(g.n):
        extend([s])
    return out


def circumference_naive(g: Graph) -> int:
    for length in range(g.n, 2, -1):
        if cycles_of_length_naive(g, length):
            return length
    return 0


def is_hamiltonian_naive(g: Graph) -> bool:
    return g.n >= 3 and bool(cycles_of_length_naive(g, g.n))


def random_mask_graph(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled graph on n vertices."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                edges.append((u, v))
    return Graph(n, edges)


def random_gnp_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)
