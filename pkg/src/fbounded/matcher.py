"""Maximum cardinality matching in simple graphs, plus two exhaustive oracles."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .multigraph import GraphError, InstanceTooLarge

MAX_BRUTE_EDGES = 22
MAX_TUTTE_BERGE_VERTICES = 20


@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free graph without parallel edges, stored as sorted neighbor lists."""

    n: int
    neighbors: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.neighbors) != self.n:
            raise GraphError(f"expected {self.n} neighbor lists, got {len(self.neighbors)}")
        for v, nbrs in enumerate(self.neighbors):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbor list of {v} must be sorted without duplicates")
            for u in nbrs:
                if not 0 <= u < self.n or u == v:
                    raise GraphError(f"invalid neighbor {u} of vertex {v}")
                if v not in self.neighbors[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if v in adj[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(a)) for a in adj))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.neighbors[u] if u < v)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.neighbors])
        indices = np.array([u for a in self.neighbors for u in a], dtype=np.int64)
        return indptr, indices


@dataclass(frozen=True)
class Matching:
    mate: tuple[int | None, ...]

    @property
    def size(self) -> int:
        return sum(1 for x in self.mate if x is not None) // 2

    def pairs(self) -> list[tuple[int, int]]:
        return [(v, u) for v, u in enumerate(self.mate) if u is not None and v < u]

    def is_valid_for(self, g: SimpleGraph) -> bool:
        if len(self.mate) != g.n:
            return False
        for v, u in enumerate(self.mate):
            if u is None:
                continue
            if self.mate[u] != v or u not in g.neighbors[v]:
                return False
        return True


def maximum_matching(g: SimpleGraph) -> Matching:
    indptr, indices = g.csr
    mate = kernels.blossom_matching(g.n, indptr, indices)
    return Matching(tuple(None if x < 0 else int(x) for x in mate))


def has_augmenting_path(g: SimpleGraph, matching: Matching) -> bool:
    """Exhaustive alternating-path search; exponential, for small test graphs only."""
    mate = matching.mate
    free = [v for v in range(g.n) if mate[v] is None]

    def extend(v: int, visited: int) -> bool:
        # v was reached along an unmatched edge; continue on its matched edge
        for u in g.neighbors[v]:
            if visited >> u & 1 or mate[v] == u:
                continue
            if mate[u] is None:
                return True
            w = mate[u]
            if visited >> w & 1:
                continue
            if extend(w, visited | 1 << u | 1 << w):
                return True
        return False

    return any(extend(v, 1 << v) for v in free)


def matching_size_brute(g: SimpleGraph) -> int:
    if len(g.edges) > MAX_BRUTE_EDGES:
        raise InstanceTooLarge(f"edge-subset enumeration needs at most {MAX_BRUTE_EDGES} edges, got {len(g.edges)}")
    best = 0
    edges = g.edges
    m = len(edges)

    def search(i: int, used: int, size: int) -> None:
        nonlocal best
        if size + (m - i) <= best:
            return
        if i == m:
            best = size
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            search(i + 1, used | 1 << u | 1 << v, size + 1)
        search(i + 1, used, size)

    search(0, 0, 0)
    return best


def odd_components_after_removal(g: SimpleGraph, S: int) -> int:
    seen = S
    odd = 0
    for root in range(g.n):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        stack = [root]
        size = 0
        while stack:
            x = stack.pop()
            size += 1
            for y in g.neighbors[x]:
                if not seen >> y & 1:
                    seen |= 1 << y
                    stack.append(y)
        odd += size & 1
    return odd


def tutte_berge_value(g: SimpleGraph, limit: int = MAX_TUTTE_BERGE_VERTICES) -> int:
    """Matching number from the classical min-max formula, by trying every S."""
    if g.n > limit:
        raise InstanceTooLarge(f"Tutte-Berge enumeration limited to n <= {limit}, got n = {g.n}")
    worst = max(
        odd_components_after_removal(g, S) - bin(S).count("1") for S in range(1 << g.n)
    )
    return (g.n - worst) // 2

