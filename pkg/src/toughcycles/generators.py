"""Named graph families and seeded random graphs.

Random generation is exact and platform-stable: edge probabilities are
rationals p = num/den and each edge is drawn as ``randrange(den) < num``
from a Mersenne-Twister stream, so a fixed seed reproduces byte-identical
graphs everywhere.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if any(s < 0 for s in sizes):
        raise ValueError("part sizes must be nonnegative")
    bounds = []
    start = 0
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    edges = []
    for ai, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[ai + 1:]:
            for u in range(a0, a1):
                for v in range(b0, b1):
                    edges.append((u, v))
    return Graph(start, edges)


def p2_kp1(k: int) -> Graph:
    """One edge 0-1 plus k isolated vertices; the forbidden pattern itself."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Graph(k + 2, [(0, 1)])


def coerce_probability(p) -> Fraction:
    """Normalize a probability given as Fraction, int, or a string like
    '1/2' or '0.7' (decimal strings are read exactly, not as binary floats)."""
    if isinstance(p, Fraction):
        frac = p
    elif isinstance(p, int):
        frac = Fraction(p)
    elif isinstance(p, str):
        frac = Fraction(p)
    elif isinstance(p, float):
        frac = Fraction(str(p))
    else:
        raise TypeError(f"cannot interpret probability {p!r}")
    if not 0 <= frac <= 1:
        raise ValueError(f"probability {frac} outside [0, 1]")
    return frac


def random_graph(n: int, p, seed: int, rng: random.Random | None = None) -> Graph:
    """G(n, p) with exact rational p, deterministic under the seed."""
    frac = coerce_probability(p)
    if rng is None:
        rng = random.Random(seed)
    num, den = frac.numerator, frac.denominator
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if num == den or (num and rng.randrange(den) < num):
                edges.append((u, v))
    return Graph(n, edges)
