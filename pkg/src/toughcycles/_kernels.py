"""Bitset solver kernels.

All hot loops operate on int64 adjacency rows: bit ``v`` of ``rows[u]`` is set
iff ``uv`` is an edge, vertices are ``0..n-1`` and ``n <= 62`` so every row
fits one signed 64-bit word. Each kernel is written in numba-compatible
numpy style and compiled with ``@njit`` by default; setting the environment
variable ``TOUGHCYCLES_NO_NUMBA=1`` (or running without numba installed)
selects the pure numpy fallback, which executes the very same source
uncompiled. ``benchmarks/bench_kernels.py`` compares the two paths.
"""
from __future__ import annotations

import os

import numpy as np


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() not in ("", "0", "false", "no")


NUMBA_ENABLED = False
if not _env_flag("TOUGHCYCLES_NO_NUMBA"):
    try:
        from numba import njit as _njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False


def kernel(fn):
    """Compile ``fn`` with numba unless the fallback path is selected."""
    if NUMBA_ENABLED:
        return _njit(cache=True)(fn)
    return fn


# 16-bit popcount table; four lookups cover a 62-bit row.
_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


@kernel
def popcount(x):
    return (
        _POP16[x & 0xFFFF]
        + _POP16[(x >> 16) & 0xFFFF]
        + _POP16[(x >> 32) & 0xFFFF]
        + _POP16[(x >> 48) & 0xFFFF]
    )


@kernel
def bit_index(bit):
    # bit is a power of two
    return popcount(bit - 1)


@kernel
def component_count(rows, n, removed):
    """Number of connected components of the graph minus ``removed``."""
    alive = ((1 << n) - 1) & ~removed
    count = 0
    while alive:
        comp = alive & -alive
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= rows[bit_index(b)]
            frontier = nxt & alive & ~comp
            comp |= frontier
        alive &= ~comp
        count += 1
    return count


@kernel
def component_of(rows, seed_bit, alive):
    """Vertex set of the component of ``alive`` containing ``seed_bit``."""
    comp = seed_bit
    frontier = seed_bit
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= rows[bit_index(b)]
        frontier = nxt & alive & ~comp
        comp |= frontier
    return comp


@kernel
def reachable_set(rows, start, allowed):
    """Vertices of ``allowed`` reachable from vertex ``start`` through ``allowed``."""
    seen = rows[start] & allowed
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= rows[bit_index(b)]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


@kernel
def toughness_scan(rows, n):
    """Exhaustive toughness: min |S|/w(G-S) over all S with w(G-S) >= 2.

    Returns (num, den, cut_mask); num == -1 means no qualifying S exists
    (complete graph). Masks are scanned in ascending order, so the witness
    is deterministic. A subset is skipped when even the best conceivable
    component count (n - |S|) cannot beat the incumbent ratio.
    """
    best_num = -1
    best_den = 1
    best_cut = 0
    total = 1 << n
    for mask in range(total):
        s = popcount(mask)
        rem = n - s
        if rem < 2:
            continue
        if best_num >= 0 and s * best_den >= best_num * rem:
            continue
        w = component_count(rows, n, mask)
        if w >= 2 and (best_num < 0 or s * best_den < best_num * w):
            best_num = s
            best_den = w
            best_cut = mask
    return best_num, best_den, best_cut


@kernel
def toughness_bnb(rows, n, budget):
    """Size-ascending bounded toughness search for graphs past the scan limit.

    Enumerates cut candidates in increasing cardinality (Gosper) and stops as
    soon as |S|/(n-|S|) can no longer beat the incumbent, which makes the
    result exact when status == 0. status == 1 means the node budget ran out.
    """
    best_num = -1
    best_den = 1
    best_cut = 0
    w = component_count(rows, n, 0)
    if w >= 2:
        best_num = 0
        best_den = w
    full = (1 << n) - 1
    nodes = 0
    for size in range(1, n - 1):
        if best_num >= 0 and size * best_den >= best_num * (n - size):
            break
        mask = (1 << size) - 1
        while True:
            nodes += 1
            if nodes > budget:
                return 1, best_num, best_den, best_cut
            w = component_count(rows, n, mask)
            if w >= 2 and (best_num < 0 or size * best_den < best_num * w):
                best_num = size
                best_den = w
                best_cut = mask
            c = mask & -mask
            r = mask + c
            mask = (((r ^ mask) >> 2) // c) | r
            if mask > full:
                break
    return 0, best_num, best_den, best_cut


@kernel
def tough_violation(rows, n, t_num, t_den):
    """First S (ascending mask order) with w(G-S) >= 2 and |S|*t_den < t_num*w.

    Returns -1 when the graph is t-tough. Caller must keep t_num/t_den small
    enough that products with n stay inside int64.
    """
    total = 1 << n
    for mask in range(total):
        s = popcount(mask)
        rem = n - s
        if rem < 2:
            continue
        if s * t_den >= t_num * rem:
            continue
        w = component_count(rows, n, mask)
        if w >= 2 and s * t_den < t_num * w:
            return mask
    return -1


@kernel
def find_small_cut(rows, n, limit):
    """Smallest vertex cut of size <= limit (lexicographic within a size).

    A cut here is any S with w(G-S) >= 2, including the empty set for a
    disconnected graph. Returns the cut mask, or -1 if none exists.
    """
    if n < 2:
        return -1
    lim = limit
    if lim > n - 2:
        lim = n - 2
    if lim < 0:
        return -1
    if component_count(rows, n, 0) >= 2:
        return 0
    full = (1 << n) - 1
    for size in range(1, lim + 1):
        mask = (1 << size) - 1
        while True:
            if component_count(rows, n, mask) >= 2:
                return mask
            c = mask & -mask
            r = mask + c
            mask = (((r ^ mask) >> 2) // c) | r
            if mask > full:
                break
    return -1


@kernel
def vertex_connectivity_flow(rows, n):
    """Exact vertex connectivity via unit-capacity max-flow with vertex
    splitting, minimised over all nonadjacent pairs. n-1 for complete graphs."""
    if n <= 1:
        return 0
    full = (1 << n) - 1
    complete = True
    for v in range(n):
        if rows[v] != full ^ (1 << v):
            complete = False
            break
    if complete:
        return n - 1
    if component_count(rows, n, 0) > 1:
        return 0
    best = n - 1
    nn = 2 * n
    cap = np.zeros((nn, nn), np.int64)
    parent = np.zeros(nn, np.int64)
    queue = np.zeros(nn, np.int64)
    for s in range(n):
        for t in range(s + 1, n):
            if (rows[s] >> t) & 1:
                continue
            for i in range(nn):
                for j in range(nn):
                    cap[i, j] = 0
            for v in range(n):
                cap[2 * v, 2 * v + 1] = 1
            cap[2 * s, 2 * s + 1] = n
            cap[2 * t, 2 * t + 1] = n
            for u in range(n):
                m = rows[u]
                while m:
                    b = m & -m
                    m ^= b
                    v = bit_index(b)
                    cap[2 * u + 1, 2 * v] = n
            flow = 0
            src = 2 * s + 1
            dst = 2 * t
            while flow < best:
                for i in range(nn):
                    parent[i] = -1
                parent[src] = src
                qh = 0
                qt = 0
                queue[qt] = src
                qt += 1
                found = False
                while qh < qt and not found:
                    x = queue[qh]
                    qh += 1
                    for y in range(nn):
                        if parent[y] < 0 and cap[x, y] > 0:
                            parent[y] = x
                            if y == dst:
                                found = True
                                break
                            queue[qt] = y
                            qt += 1
                if not found:
                    break
                y = dst
                while y != src:
                    x = parent[y]
                    cap[x, y] -= 1
                    cap[y, x] += 1
                    y = x
                flow += 1
            if flow < best:
                best = flow
    return best


@kernel
def alpha_max(rows, cand0):
    """Maximum independent set size within the candidate mask (branch and bound)."""
    best = 0
    cs = np.zeros(160, np.int64)
    us = np.zeros(160, np.int64)
    sp = 0
    cs[0] = cand0
    us[0] = 0
    while sp >= 0:
        cand = cs[sp]
        size = us[sp]
        sp -= 1
        pc = popcount(cand)
        if size + pc <= best:
            continue
        if cand == 0:
            best = size
            continue
        # branch on the max-degree vertex inside the candidate set
        bv = -1
        bd = -1
        m = cand
        while m:
            b = m & -m
            m ^= b
            v = bit_index(b)
            dv = popcount(rows[v] & cand)
            if dv > bd:
                bd = dv
                bv = v
        if bd == 0:
            best = size + pc
            continue
        vbit = 1 << bv
        sp += 1
        cs[sp] = cand ^ vbit
        us[sp] = size
        sp += 1
        cs[sp] = cand & ~(rows[bv] | vbit)
        us[sp] = size + 1
    return best


@kernel
def lex_min_independent_set(rows, region, k):
    """Lexicographically smallest independent k-subset of ``region`` (as a
    mask), or 0 if none exists. Vertices are tried in ascending order, so the
    first complete assignment is the lex-min one."""
    if k <= 0:
        return 0
    cand = np.zeros(k + 1, np.int64)
    chosen = np.zeros(k + 1, np.int64)
    level = 0
    cand[0] = region
    while level >= 0:
        c = cand[level]
        if c == 0 or popcount(c) < k - level:
            level -= 1
            continue
        vbit = c & -c
        cand[level] = c ^ vbit
        chosen[level] = vbit
        if level == k - 1:
            out = 0
            for i in range(k):
                out |= chosen[i]
            return out
        v = bit_index(vbit)
        cand[level + 1] = c & ~(rows[v] | vbit) & ~((vbit << 1) - 1)
        level += 1
    return 0


@kernel
def p2kp1_violating_edge(rows, n, k):
    """First edge (lex order) whose undominated remainder holds an independent
    k-set, i.e. an induced one-edge-plus-k-isolated-vertices pattern. Returns
    x * 64 + y, or -1 when the graph is free of the pattern."""
    full = (1 << n) - 1
    for x in range(n):
        m = rows[x] & ~((2 << x) - 1)
        while m:
            b = m & -m
            m ^= b
            y = bit_index(b)
            region = full & ~(rows[x] | rows[y] | (1 << x) | b)
            if popcount(region) >= k and lex_min_independent_set(rows, region, k) != 0:
                return x * 64 + y
    return -1


@kernel
def p2kp1_contains_naive(rows, n, k):
    """Oracle route: scan all (k+2)-subsets for one that induces exactly one
    edge plus k isolated vertices. Returns the subset mask, 0 if none."""
    total = 1 << n
    size = k + 2
    for mask in range(total):
        if popcount(mask) != size:
            continue
        degsum = 0
        ok = True
        m = mask
        while m:
            b = m & -m
            m ^= b
            d = popcount(rows[bit_index(b)] & mask)
            if d > 1:
                ok = False
                break
            degsum += d
        if ok and degsum == 2:
            return mask
    return 0


@kernel
def lemma_first_violation(rows, n, k):
    """First (v, X) over all independent sets X with N(v) meeting X in fewer
    than |X|-k+1 vertices (but at least one). Returns (-1, 0) when none."""
    total = 1 << n
    for x_mask in range(1, total):
        ok = True
        m = x_mask
        while m:
            b = m & -m
            m ^= b
            if rows[bit_index(b)] & x_mask:
                ok = False
                break
        if not ok:
            continue
        need = popcount(x_mask) - k + 1
        if need <= 1:
            continue
        for v in range(n):
            if (x_mask >> v) & 1:
                continue
            c = popcount(rows[v] & x_mask)
            if c != 0 and c < need:
                return v, x_mask
    return -1, 0


@kernel
def hamiltonian_cycle_dp(rows, n):
    """Subset DP over vertex 0-anchored paths; dp[mask] holds the endpoint set
    of hamiltonian paths of {0} + mask starting at 0. Returns (found, path)."""
    path = np.zeros(n if n > 0 else 1, np.int64)
    if n < 3:
        return False, path
    nm = n - 1
    srows = np.zeros(nm, np.int64)
    for v in range(1, n):
        srows[v - 1] = rows[v] >> 1
    adj0 = rows[0] >> 1
    size = 1 << nm
    dp = np.zeros(size, np.int64)
    m = adj0
    while m:
        b = m & -m
        m ^= b
        dp[b] = b
    fullm = size - 1
    for mask in range(1, size):
        ep = dp[mask]
        if ep == 0:
            continue
        f = fullm & ~mask
        while f:
            b = f & -f
            f ^= b
            if ep & srows[bit_index(b)]:
                dp[mask | b] |= b
    close = dp[fullm] & adj0
    if close == 0:
        return False, path
    mask = fullm
    vb = close & -close
    i = n - 1
    while True:
        v_sh = bit_index(vb)
        path[i] = v_sh + 1
        pm = mask ^ vb
        if pm == 0:
            break
        prev = dp[pm] & srows[v_sh]
        vb = prev & -prev
        mask = pm
        i -= 1
    return True, path


@kernel
def longest_cycle_search(rows, n, budget):
    """Exact longest cycle by DFS over paths whose start is the cycle's
    minimum vertex, with bitset reachability pruning.

    Returns (status, length, path): status 0 means the search is exhaustive,
    1 means the node budget ran out (best found so far is still returned).
    length == 0 means acyclic.
    """
    best_len = 0
    best_path = np.zeros(n if n > 0 else 1, np.int64)
    if n < 3:
        return 0, 0, best_path
    path = np.zeros(n + 1, np.int64)
    cst = np.zeros(n + 1, np.int64)
    full = (1 << n) - 1
    nodes = 0
    for s in range(n):
        if n - s <= best_len:
            break
        sbit = 1 << s
        high = full & ~((2 << s) - 1)
        depth = 0
        path[0] = s
        used = sbit
        cst[0] = rows[s] & high
        while depth >= 0:
            c = cst[depth]
            if c == 0:
                depth -= 1
                if depth >= 0:
                    used &= ~(1 << path[depth + 1])
                continue
            vbit = c & -c
            cst[depth] = c ^ vbit
            v = bit_index(vbit)
            nodes += 1
            if nodes > budget:
                return 1, best_len, best_path
            plen = depth + 2
            if plen >= 3 and (rows[v] & sbit) != 0 and plen > best_len:
                for i in range(depth + 1):
                    best_path[i] = path[i]
                best_path[plen - 1] = v
                best_len = plen
                if best_len == n:
                    return 0, best_len, best_path
            avail = high & ~used & ~vbit
            r = reachable_set(rows, v, avail)
            if plen + popcount(r) <= best_len:
                continue
            if (r & rows[s]) == 0:
                continue
            path[depth + 1] = v
            used |= vbit
            depth += 1
            cst[depth] = rows[v] & avail
    return 0, best_len, best_path


@kernel
def cycles_of_length(rows, n, length, cap, budget):
    """All cycles of exactly ``length`` vertices in canonical enumeration
    order (min vertex first, smaller second neighbor fixes the direction).

    Returns (status, count, buffer): status 0 complete, 1 budget exhausted,
    2 truncated at ``cap``.
    """
    if length < 3 or length > n or cap < 1:
        return 0, 0, np.zeros((0, 1), np.int64)
    out = np.zeros((cap, length), np.int64)
    count = 0
    path = np.zeros(length + 1, np.int64)
    cst = np.zeros(length + 1, np.int64)
    full = (1 << n) - 1
    nodes = 0
    for s in range(n - length + 1):
        sbit = 1 << s
        high = full & ~((2 << s) - 1)
        depth = 0
        path[0] = s
        used = sbit
        cst[0] = rows[s] & high
        while depth >= 0:
            c = cst[depth]
            if c == 0:
                depth -= 1
                if depth >= 0:
                    used &= ~(1 << path[depth + 1])
                continue
            vbit = c & -c
            cst[depth] = c ^ vbit
            v = bit_index(vbit)
            nodes += 1
            if nodes > budget:
                return 1, count, out
            plen = depth + 2
            if plen == length:
                if (rows[v] & sbit) != 0 and path[1] < v:
                    if count >= cap:
                        return 2, count, out
                    for i in range(depth + 1):
                        out[count, i] = path[i]
                    out[count, length - 1] = v
                    count += 1
                continue
            avail = high & ~used & ~vbit
            r = reachable_set(rows, v, avail)
            if popcount(r) < length - plen:
                continue
            if (r & rows[s]) == 0:
                continue
            path[depth + 1] = v
            used |= vbit
            depth += 1
            cst[depth] = rows[v] & avail
    return 0, count, out


@kernel
def find_non_dominating_cycle(rows, n, length, budget):
    """Search the cycles of exactly ``length`` vertices for one whose removal
    leaves a component of size >= 2 (equivalently: off-cycle vertices are not
    independent). Returns (status, found, path)."""
    path_out = np.zeros(length if length > 0 else 1, np.int64)
    if length < 3 or length > n:
        return 0, False, path_out
    full = (1 << n) - 1
    path = np.zeros(length + 1, np.int64)
    cst = np.zeros(length + 1, np.int64)
    nodes = 0
    for s in range(n - length + 1):
        sbit = 1 << s
        high = full & ~((2 << s) - 1)
        depth = 0
        path[0] = s
        used = sbit
        cst[0] = rows[s] & high
        while depth >= 0:
            c = cst[depth]
            if c == 0:
                depth -= 1
                if depth >= 0:
                    used &= ~(1 << path[depth + 1])
                continue
            vbit = c & -c
            cst[depth] = c ^ vbit
            v = bit_index(vbit)
            nodes += 1
            if nodes > budget:
                return 1, False, path_out
            plen = depth + 2
            if plen == length:
                if (rows[v] & sbit) != 0 and path[1] < v:
                    offm = full & ~(used | vbit)
                    m = offm
                    bad = False
                    while m:
                        b = m & -m
                        m ^= b
                        if rows[bit_index(b)] & offm:
                            bad = True
                            break
                    if bad:
                        for i in range(depth + 1):
                            path_out[i] = path[i]
                        path_out[length - 1] = v
                        return 0, True, path_out
                continue
            avail = high & ~used & ~vbit
            r = reachable_set(rows, v, avail)
            if popcount(r) < length - plen:
                continue
            if (r & rows[s]) == 0:
                continue
            path[depth + 1] = v
            used |= vbit
            depth += 1
            cst[depth] = rows[v] & avail
    return 0, False, path_out
