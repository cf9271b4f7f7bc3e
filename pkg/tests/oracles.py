"""Independent reference implementations used to freeze expected values.

Nothing here imports the solver or the kernel: colorings are checked with
numpy over every assignment in lexicographic order.
"""

from __future__ import annotations

import itertools

import numpy as np

CHUNK = 1 << 18


def _adjacency(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _valid_mask(block, n, edges, adj, r):
    ok = np.ones(block.shape[0], dtype=bool)
    for u, v in edges:
        ok &= block[:, u] != block[:, v]
    bits = np.left_shift(np.int64(1), block.astype(np.int64))
    for v in range(n):
        need = min(len(adj[v]), r)
        if need == 0:
            continue
        seen = np.zeros(block.shape[0], dtype=np.int64)
        for u in adj[v]:
            seen |= bits[:, u]
        count = np.zeros(block.shape[0], dtype=np.int64)
        while seen.any():
            count += seen & 1
            seen >>= 1
        ok &= count >= need
    return ok


def _blocks(n, k):
    """All assignments in ``1..k`` with vertex 0 fixed to 1, in lexicographic order."""
    total = k ** (n - 1)
    powers = k ** np.arange(n - 2, -1, -1, dtype=np.int64)
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        block = np.empty((idx.size, n), dtype=np.int8)
        block[:, 0] = 1
        if n > 1:
            block[:, 1:] = (idx[:, None] // powers[None, :]) % k + 1
        yield block


def first_valid(n, edges, k, r):
    """Lexicographically least conditional coloring with colors in 1..k, or None.

    Relabeling colors preserves validity, so some least assignment starts with
    color 1 and fixing vertex 0 loses nothing.
    """
    edges = [tuple(e) for e in edges]
    adj = _adjacency(n, edges)
    for block in _blocks(n, k):
        ok = _valid_mask(block, n, edges, adj, r)
        hit = np.flatnonzero(ok)
        if hit.size:
            return tuple(int(c) for c in block[hit[0]])
    return None


def chi_r(n, edges, r):
    """Smallest k with a conditional (k, r)-coloring, by trying every assignment."""
    if n == 1:
        return 1
    for k in range(1, n + 1):
        if first_valid(n, edges, k, r) is not None:
            return k
    raise AssertionError("n colors always suffice")


def least_coloring(n, edges, r):
    k = chi_r(n, edges, r)
    return k, first_valid(n, edges, k, r)


def all_colorings(n, edges, k, r, surjective=True):
    """Every valid assignment over 1..k (no symmetry reduction), via itertools."""
    adj = _adjacency(n, edges)
    out = []
    for colors in itertools.product(range(1, k + 1), repeat=n):
        if any(colors[u] == colors[v] for u, v in edges):
            continue
        if any(len({colors[u] for u in adj[v]}) < min(len(adj[v]), r) for v in range(n)):
            continue
        if surjective and len(set(colors)) != k:
            continue
        out.append(colors)
    return out


def partitions(colorings):
    sigs = set()
    for colors in colorings:
        classes = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        sigs.add(tuple(sorted(tuple(b) for b in classes.values())))
    return sigs


def max_vset(n, edges, r):
    """Largest Vset-d2r by checking every subset; for tiny graphs only."""
    adj = [set(a) for a in _adjacency(n, edges)]
    low = [v for v in range(n) if len(adj[v]) <= r]
    for size in range(len(low), 0, -1):
        for s in itertools.combinations(low, size):
            inside = set(s)
            if all(b in adj[a] or (adj[a] & adj[b] & inside)
                   for a, b in itertools.combinations(s, 2)):
                return size
    return 0
