"""Loop-free multigraphs on dense vertex ids, with the set/cut/component primitives.

Vertex subsets are plain Python ints used as bitmasks (bit ``v`` set iff
``v`` is a member). ``vertex_set`` and ``members`` convert to and from
iterables.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

MAX_VERTICES = 63

VertexSet = int


class GraphError(ValueError):
    """Raised for malformed multigraphs, weights or vertex sets."""


class InstanceTooLarge(ValueError):
    """Raised when an exhaustive operation is asked to run beyond its guard."""


def vertex_set(vertices: Iterable[int] | int) -> VertexSet:
    if isinstance(vertices, (int, np.integer)):
        if vertices < 0:
            raise GraphError("vertex set bitmask must be nonnegative")
        return int(vertices)
    mask = 0
    for v in vertices:
        if v < 0:
            raise GraphError(f"negative vertex id {v}")
        mask |= 1 << int(v)
    return mask


def members(mask: VertexSet) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices ``0..n-1``.

    Parallel edges are repeated entries of ``edges``; the position of an edge
    in the tuple is its index. Self-loops are rejected.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 0..{MAX_VERTICES}, got {self.n}")
        normalized = []
        for idx, e in enumerate(self.edges):
            u, v = (int(x) for x in e)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {idx} = ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"edge {idx} is a loop at vertex {u}")
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @cached_property
    def endpoints(self) -> tuple[np.ndarray, np.ndarray]:
        """Edge endpoint arrays ``(eu, ev)`` as int64."""
        arr = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])

    @cached_property
    def multiplicity(self) -> np.ndarray:
        """Symmetric ``n x n`` matrix of edge multiplicities."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        eu, ev = self.endpoints
        np.add.at(a, (eu, ev), 1)
        np.add.at(a, (ev, eu), 1)
        return a

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(d) for d in self.multiplicity.sum(axis=1)) if self.n else ()

    def check_set(self, mask: VertexSet) -> VertexSet:
        mask = vertex_set(mask)
        if mask >> self.n:
            raise GraphError(f"vertex set {members(mask)} is not contained in 0..{self.n - 1}")
        return mask


def check_weights(G: Multigraph, f: Sequence[int]) -> tuple[int, ...]:
    """Validate a vertex weighting against ``G`` and return it as a tuple."""
    values = tuple(int(x) for x in f)
    if len(values) != G.n:
        raise GraphError(f"weight vector has length {len(values)}, expected {G.n}")
    for v, x in enumerate(values):
        if x < 0:
            raise GraphError(f"weight of vertex {v} is negative ({x})")
    return values


def weight_sum(f: Sequence[int], S: VertexSet) -> int:
    return sum(f[v] for v in members(vertex_set(S)))


def _require_disjoint(A: VertexSet, B: VertexSet, names: str) -> None:
    if A & B:
        raise GraphError(f"{names} must be disjoint; both contain {members(A & B)}")


def edge_count_between(G: Multigraph, A: VertexSet, B: VertexSet) -> int:
    """Number of edges with one endpoint in ``A`` and the other in ``B``."""
    A, B = G.check_set(A), G.check_set(B)
    _require_disjoint(A, B, "A and B")
    count = 0
    for u, v in G.edges:
        if (A >> u & 1 and B >> v & 1) or (A >> v & 1 and B >> u & 1):
            count += 1
    return count


def edge_count_within(G: Multigraph, A: VertexSet) -> int:
    A = G.check_set(A)
    return sum(1 for u, v in G.edges if A >> u & 1 and A >> v & 1)


def degree_in_minus(G: Multigraph, S: VertexSet, T: VertexSet) -> int:
    """Total degree of ``T`` in ``G - S``."""
    S, T = G.check_set(S), G.check_set(T)
    _require_disjoint(S, T, "S and T")
    total = 0
    for u, v in G.edges:
        if S >> u & 1 or S >> v & 1:
            continue
        total += (T >> u & 1) + (T >> v & 1)
    return total


def components(G: Multigraph, R: VertexSet) -> list[VertexSet]:
    """Vertex sets of the components of ``G[R]``, ordered by minimum vertex."""
    R = G.check_set(R)
    adj: dict[int, list[int]] = {v: [] for v in members(R)}
    for u, v in G.edges:
        if R >> u & 1 and R >> v & 1:
            adj[u].append(v)
            adj[v].append(u)
    seen = 0
    out = []
    for root in sorted(adj):
        if seen >> root & 1:
            continue
        comp = 1 << root
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not comp >> y & 1:
                    comp |= 1 << y
                    stack.append(y)
        seen |= comp
        out.append(comp)
    return out

