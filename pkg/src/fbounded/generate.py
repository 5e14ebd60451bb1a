"""Seeded random instances.

All randomness comes from ``numpy.random.Generator(numpy.random.PCG64(seed))``
with a 64-bit seed. For ``random_instance(n, m, fmax, seed)`` the draws are,
in order:

1. ``f = rng.integers(0, fmax + 1, size=n)``
2. ``idx = rng.integers(0, n*(n-1)//2, size=m)``, each index picking one of
   the unordered pairs ``(u, v), u < v`` listed lexicographically.

Self-test instances first draw ``n = rng.integers(1, n_max + 1)`` and
``m = rng.integers(0, m_max + 1)`` (``m = 0`` when ``n == 1``) from the same
stream, then continue as above.
"""
from __future__ import annotations

import numpy as np

from .matcher import SimpleGraph
from .multigraph import GraphError, Multigraph

SEED_BITS = 64


def make_rng(seed: int | np.random.Generator) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if not 0 <= seed < 1 << SEED_BITS:
        raise ValueError(f"seed must be a 64-bit unsigned value, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def random_instance(n: int, m: int, fmax: int, seed) -> tuple[Multigraph, tuple[int, ...]]:
    if n < 1:
        raise GraphError(f"need at least one vertex, got n = {n}")
    if m < 0 or fmax < 0:
        raise GraphError("edge count and f-max must be nonnegative")
    pairs = _pairs(n)
    if m > 0 and not pairs:
        raise GraphError(f"cannot place {m} edges on a single vertex without loops")
    rng = make_rng(seed)
    f = tuple(int(x) for x in rng.integers(0, fmax + 1, size=n))
    idx = rng.integers(0, len(pairs), size=m) if m else []
    return Multigraph(n, tuple(pairs[int(i)] for i in idx)), f


def selftest_instance(seed: int, n_max: int, m_max: int, fmax: int) -> tuple[Multigraph, tuple[int, ...]]:
    rng = make_rng(seed)
    n = int(rng.integers(1, n_max + 1))
    m = 0 if n == 1 else int(rng.integers(0, m_max + 1))
    return random_instance(n, m, fmax, rng)


def random_simple_graph(n: int, max_edges: int, seed) -> SimpleGraph:
    """Uniform random subset of at most ``max_edges`` distinct vertex pairs."""
    rng = make_rng(seed)
    pairs = _pairs(n)
    k = int(rng.integers(0, min(max_edges, len(pairs)) + 1))
    chosen = rng.choice(len(pairs), size=k, replace=False) if k else []
    return SimpleGraph.from_edges(n, [pairs[int(i)] for i in chosen])


def random_subcubic_graph(n: int, seed) -> SimpleGraph:
    """Random simple graph with maximum degree at most 3."""
    rng = make_rng(seed)
    pairs = _pairs(n)
    order = rng.permutation(len(pairs))
    keep_prob = rng.uniform(0.3, 1.0)
    deg = [0] * n
    edges = []
    for i in order:
        u, v = pairs[int(i)]
        if deg[u] < 3 and deg[v] < 3 and rng.random() < keep_prob:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)
