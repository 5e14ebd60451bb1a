"""Tutte deficiency of ordered pairs (S, T), its min-max companions, and
exhaustive maximization with a certificate.

All quantities are exact integers. Scalar functions work from the set
primitives in :mod:`fbounded.multigraph`; whole-range scans go through
:mod:`fbounded.kernels`.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .io import dump_kv, format_groups, format_ids, load_kv, parse_groups, parse_ids
from .multigraph import (
    GraphError,
    InstanceTooLarge,
    Multigraph,
    VertexSet,
    check_weights,
    components,
    degree_in_minus,
    edge_count_between,
    edge_count_within,
    members,
    vertex_set,
    weight_sum,
)

DEFAULT_LIMIT = 16
HARD_LIMIT = 20
TABLE_LIMIT = 12


@dataclass(frozen=True)
class PartitionPair:
    """Disjoint vertex sets S and T; the rest of the vertices form R."""

    S: VertexSet = 0
    T: VertexSet = 0

    def __post_init__(self) -> None:
        S, T = vertex_set(self.S), vertex_set(self.T)
        if S & T:
            raise GraphError(f"S and T overlap in {members(S & T)}")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "T", T)

    @classmethod
    def of(cls, S=(), T=()) -> PartitionPair:
        return cls(vertex_set(S), vertex_set(T))

    @classmethod
    def from_code(cls, code: int, n: int) -> PartitionPair:
        S = T = 0
        for v in range(n):
            code, digit = divmod(code, 3)
            if digit == kernels.ROLE_S:
                S |= 1 << v
            elif digit == kernels.ROLE_T:
                T |= 1 << v
        return cls(S, T)

    def code(self, n: int) -> int:
        out = 0
        for v in reversed(range(n)):
            digit = kernels.ROLE_S if self.S >> v & 1 else kernels.ROLE_T if self.T >> v & 1 else kernels.ROLE_R
            out = out * 3 + digit
        return out

    def rest(self, G: Multigraph) -> VertexSet:
        return G.all_vertices & ~self.S & ~self.T


def _pair(G: Multigraph, pair: PartitionPair) -> PartitionPair:
    G.check_set(pair.S)
    G.check_set(pair.T)
    return pair


def is_bad_component(G: Multigraph, f: Sequence[int], Q: VertexSet, T: VertexSet) -> bool:
    return (weight_sum(f, Q) + edge_count_between(G, Q, T)) % 2 == 1


def bad_components(G: Multigraph, f: Sequence[int], pair: PartitionPair) -> list[VertexSet]:
    pair = _pair(G, pair)
    return [Q for Q in components(G, pair.rest(G)) if is_bad_component(G, f, Q, pair.T)]


def q_count(G: Multigraph, f: Sequence[int], pair: PartitionPair) -> int:
    return len(bad_components(G, f, pair))


def deficiency(G: Multigraph, f: Sequence[int], pair: PartitionPair) -> int:
    """f(T) - f(S) - d_{G-S}(T) + q(S, T); may be negative."""
    pair = _pair(G, pair)
    return (
        weight_sum(f, pair.T)
        - weight_sum(f, pair.S)
        - degree_in_minus(G, pair.S, pair.T)
        + q_count(G, f, pair)
    )


def schrijver_bound(G: Multigraph, f: Sequence[int], pair: PartitionPair) -> int:
    """f(S) + ||T|| + sum over components Q of G-S-T of floor((f(Q) + ||Q,T||) / 2)."""
    pair = _pair(G, pair)
    total = weight_sum(f, pair.S) + edge_count_within(G, pair.T)
    for Q in components(G, pair.rest(G)):
        total += (weight_sum(f, Q) + edge_count_between(G, Q, pair.T)) // 2
    return total


def parity_check(G: Multigraph, f: Sequence[int], pair: PartitionPair) -> bool:
    return (deficiency(G, f, pair) - weight_sum(f, G.all_vertices)) % 2 == 0


def odd_weight_components(G: Multigraph, f: Sequence[int]) -> int:
    return sum(weight_sum(f, C) % 2 for C in components(G, G.all_vertices))


def deficiency_empty_pair_identity(G: Multigraph, f: Sequence[int]) -> bool:
    return deficiency(G, f, PartitionPair()) == odd_weight_components(G, f)


def _guard(G: Multigraph, limit: int) -> None:
    if limit > HARD_LIMIT:
        raise ValueError(f"exhaustive limit may not exceed {HARD_LIMIT}, got {limit}")
    if G.n > limit:
        raise InstanceTooLarge(f"exhaustive pair enumeration limited to n <= {limit}, got n = {G.n}")


def _arrays(G: Multigraph, f: Sequence[int]):
    eu, ev = G.endpoints
    return G.n, eu, ev, np.asarray(check_weights(G, f), dtype=np.int64)


@dataclass(frozen=True)
class PairTable:
    """Per-pair values for every code ``0 .. 3**n - 1``."""

    n: int
    deficiency: np.ndarray
    schrijver: np.ndarray
    t_edges: np.ndarray

    def pair(self, code: int) -> PartitionPair:
        return PartitionPair.from_code(code, self.n)


def pair_table(G: Multigraph, f: Sequence[int], limit: int = TABLE_LIMIT) -> PairTable:
    _guard(G, limit)
    d, s, t = kernels.pair_table(*_arrays(G, f))
    return PairTable(G.n, np.asarray(d), np.asarray(s), np.asarray(t))


def scan_pairs(G: Multigraph, f: Sequence[int], limit: int = DEFAULT_LIMIT) -> tuple[int, int, int, int, int]:
    """Whole-range statistics without a table; see :func:`kernels.scan_pairs_numba`."""
    _guard(G, limit)
    return tuple(int(x) for x in kernels.scan_pairs(*_arrays(G, f)))


@dataclass(frozen=True)
class DeficiencyCertificate:
    pair: PartitionPair
    gamma: int
    bad_components: list[VertexSet] = field(default_factory=list)
    f_total: int = 0

    @property
    def bound(self) -> int:
        """Largest possible size of an f-bounded subgraph, (f(U) - gamma) / 2."""
        return (self.f_total - self.gamma) // 2

    def check(self, G: Multigraph, f: Sequence[int]) -> list[str]:
        """Recompute the certificate's own claims; returns a list of problems."""
        problems = []
        actual = deficiency(G, f, self.pair)
        if actual != self.gamma:
            problems.append(f"deficiency at (S, T) is {actual}, certificate claims {self.gamma}")
        if self.gamma < 0:
            problems.append(f"gamma = {self.gamma} is negative")
        if self.f_total != weight_sum(f, G.all_vertices):
            problems.append(f"f_total = {self.f_total} but f(U) = {weight_sum(f, G.all_vertices)}")
        if (self.gamma - self.f_total) % 2:
            problems.append("gamma and f(U) differ in parity")
        if sorted(self.bad_components) != sorted(bad_components(G, f, self.pair)):
            problems.append("bad component list does not match G - S - T")
        return problems

    def to_kv(self) -> dict[str, object]:
        return {
            "gamma": self.gamma,
            "S": format_ids(self.pair.S),
            "T": format_ids(self.pair.T),
            "bad_components": format_groups(self.bad_components),
            "f_total": self.f_total,
        }

    def to_text(self) -> str:
        comps = " ".join("{" + format_ids(Q) + "}" for Q in self.bad_components) or "none"
        return (
            f"max deficiency gamma: {self.gamma}\n"
            f"S: {{{format_ids(self.pair.S)}}}\n"
            f"T: {{{format_ids(self.pair.T)}}}\n"
            f"bad components: {comps}\n"
            f"f(U): {self.f_total}\n"
            f"implied bound on |H|: {self.bound}\n"
        )

    @classmethod
    def from_kv(cls, doc: dict[str, str] | str) -> DeficiencyCertificate:
        if isinstance(doc, str):
            doc = load_kv(doc)
        try:
            return cls(
                pair=PartitionPair.of(parse_ids(doc["S"]), parse_ids(doc["T"])),
                gamma=int(doc["gamma"]),
                bad_components=parse_groups(doc.get("bad_components", "")),
                f_total=int(doc["f_total"]),
            )
        except KeyError as exc:
            raise GraphError(f"certificate is missing field {exc.args[0]!r}") from None

    def dumps(self) -> str:
        return dump_kv(self.to_kv())


def max_deficiency(G: Multigraph, f: Sequence[int], limit: int = DEFAULT_LIMIT) -> DeficiencyCertificate:
    """Exhaustive maximum of the deficiency over all 3**n ordered pairs.

    Ties go to the smallest pair code, i.e. the first maximizer met by a
    base-3 counter with vertex 0 as its lowest digit.
    """
    code, gamma = scan_pairs(G, f, limit)[:2]
    pair = PartitionPair.from_code(int(code), G.n)
    gamma = int(gamma)
    if deficiency(G, f, pair) != gamma:
        raise AssertionError("pair scan disagrees with the scalar deficiency")
    return DeficiencyCertificate(
        pair=pair,
        gamma=gamma,
        bad_components=bad_components(G, f, pair),
        f_total=weight_sum(f, G.all_vertices),
    )


@dataclass(frozen=True)
class FactorCheck:
    exists: bool
    witness: PartitionPair | None = None

    def __bool__(self) -> bool:
        return self.exists


def has_f_factor(G: Multigraph, f: Sequence[int], limit: int = DEFAULT_LIMIT, method: str = "auto") -> FactorCheck:
    """Decide whether G has an f-factor.

    ``method="exhaustive"`` uses the maximum deficiency and returns a pair of
    positive deficiency when no factor exists. ``method="solver"`` compares
    the maximum f-bounded degree sum with f(U) and gives no witness.
    ``"auto"`` picks exhaustive whenever ``n <= limit``.
    """
    if method == "auto":
        method = "exhaustive" if G.n <= limit else "solver"
    if method == "exhaustive":
        cert = max_deficiency(G, f, limit)
        if cert.gamma > 0:
            return FactorCheck(False, cert.pair)
        return FactorCheck(True)
    if method == "solver":
        from .solver import h_value

        return FactorCheck(h_value(G, f) == weight_sum(f, G.all_vertices))
    raise ValueError(f"unknown method {method!r}")
