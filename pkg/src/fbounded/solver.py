"""Maximum f-bounded subgraphs.

The solver expands (G, f) into a simple graph whose maximum matchings have
exactly ``m + |H|`` edges for a maximum f-bounded subgraph ``H``, then reads
``H`` back off the matching. A brute-force oracle over edge subsets and the
full min-max verification live here as well.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .formula import (
    DEFAULT_LIMIT,
    DeficiencyCertificate,
    PartitionPair,
    deficiency,
    max_deficiency,
    odd_weight_components,
    scan_pairs,
)
from .io import dump_kv, format_ids
from .matcher import MAX_BRUTE_EDGES, SimpleGraph, maximum_matching
from .multigraph import InstanceTooLarge, Multigraph, check_weights


@dataclass(frozen=True)
class Subgraph:
    """Spanning subgraph given by a set of edge indices of its host."""

    edge_indices: tuple[int, ...]
    degree: tuple[int, ...]

    @classmethod
    def from_edges(cls, G: Multigraph, edge_indices) -> Subgraph:
        idx = tuple(sorted(int(j) for j in edge_indices))
        deg = [0] * G.n
        for j in idx:
            u, v = G.edges[j]
            deg[u] += 1
            deg[v] += 1
        return cls(idx, tuple(deg))

    @property
    def size(self) -> int:
        return len(self.edge_indices)

    @property
    def degree_sum(self) -> int:
        return 2 * self.size

    def is_f_bounded(self, f: Sequence[int]) -> bool:
        return all(d <= fv for d, fv in zip(self.degree, f))


@dataclass(frozen=True)
class GadgetMap:
    copies: tuple[tuple[int, ...], ...]
    edge_pairs: tuple[tuple[int, int], ...]

    @property
    def n_expanded(self) -> int:
        return sum(len(c) for c in self.copies) + 2 * len(self.edge_pairs)


@dataclass(frozen=True)
class AugmentedInstance:
    g_prime: Multigraph
    f_prime: tuple[int, ...]
    gamma: int
    w_id: int


def brute_force_max_fbounded(G: Multigraph, f: Sequence[int], max_edges: int = MAX_BRUTE_EDGES) -> Subgraph:
    """Try every edge subset; ties go to the smallest index bitmask."""
    f = check_weights(G, f)
    if G.m > max_edges:
        raise InstanceTooLarge(f"edge-subset enumeration limited to m <= {max_edges}, got m = {G.m}")
    eu, ev = G.endpoints
    mask, _ = kernels.best_subset(G.n, eu, ev, np.asarray(f, dtype=np.int64))
    mask = int(mask)
    return Subgraph.from_edges(G, [j for j in range(G.m) if mask >> j & 1])


def expand_gadget(G: Multigraph, f: Sequence[int]) -> tuple[SimpleGraph, GadgetMap]:
    """Vertex ``v`` becomes ``f(v)`` copies; edge ``{u, v}`` becomes a path
    ``copies(u) - e_u - e_v - copies(v)`` with e_u joined to every copy of u
    and e_v to every copy of v."""
    f = check_weights(G, f)
    copies = []
    nxt = 0
    for fv in f:
        copies.append(tuple(range(nxt, nxt + fv)))
        nxt += fv
    edge_pairs = []
    edges = []
    for u, v in G.edges:
        eu, ev = nxt, nxt + 1
        nxt += 2
        edge_pairs.append((eu, ev))
        edges.append((eu, ev))
        edges.extend((eu, c) for c in copies[u])
        edges.extend((ev, c) for c in copies[v])
    return SimpleGraph.from_edges(nxt, edges), GadgetMap(tuple(copies), tuple(edge_pairs))


def _normalize(mate: list[int | None], gadget: GadgetMap) -> list[int | None]:
    """Make every gadget pair either matched to each other or both matched to copies."""
    mate = list(mate)
    for a, b in gadget.edge_pairs:
        ma, mb = mate[a], mate[b]
        if ma == b:
            continue
        if ma is not None and mb is not None:
            continue
        if ma is not None:
            mate[ma] = None
        if mb is not None:
            mate[mb] = None
        mate[a], mate[b] = b, a
    return mate


def solve_max_fbounded(G: Multigraph, f: Sequence[int]) -> Subgraph:
    f = check_weights(G, f)
    g, gadget = expand_gadget(G, f)
    matching = maximum_matching(g)
    mate = _normalize(list(matching.mate), gadget)
    chosen = []
    for j, (a, b) in enumerate(gadget.edge_pairs):
        if mate[a] == b:
            continue
        assert mate[a] is not None and mate[b] is not None, "gadget pair left uncovered"
        chosen.append(j)
    H = Subgraph.from_edges(G, chosen)
    matched = sum(1 for x in mate if x is not None) // 2
    assert matched == matching.size + sum(
        1 for a, b in gadget.edge_pairs if matching.mate[a] is None and matching.mate[b] is None
    ), "normalization changed the matching size unexpectedly"
    assert matched - G.m == H.size
    assert H.is_f_bounded(f)
    return H


def h_value(G: Multigraph, f: Sequence[int]) -> int:
    """Maximum degree sum of an f-bounded subgraph."""
    return solve_max_fbounded(G, f).degree_sum


def augment_with_w(G: Multigraph, f: Sequence[int], gamma: int) -> AugmentedInstance:
    """Add a vertex ``w`` joined to every vertex by ``gamma`` parallel edges, with ``f'(w) = gamma``."""
    f = check_weights(G, f)
    if gamma < 1:
        raise ValueError(f"gamma must be at least 1, got {gamma}")
    w = G.n
    edges = G.edges + tuple((v, w) for v in range(G.n) for _ in range(gamma))
    return AugmentedInstance(Multigraph(G.n + 1, edges), f + (gamma,), gamma, w)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    n: int
    m: int
    f_total: int
    subgraph: Subgraph
    certificate: DeficiencyCertificate
    checks: list[Check] = field(default_factory=list)

    @property
    def h(self) -> int:
        return self.subgraph.degree_sum

    @property
    def gamma(self) -> int:
        return self.certificate.gamma

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def to_kv(self) -> dict[str, object]:
        doc: dict[str, object] = {
            "status": "PASS" if self.passed else "FAIL",
            "n": self.n,
            "m": self.m,
            "f_total": self.f_total,
            "size": self.subgraph.size,
            "h": self.h,
        }
        doc.update(self.certificate.to_kv())
        for c in self.checks:
            doc[f"check.{c.name}"] = "pass" if c.passed else "fail"
        failure = self.first_failure
        if failure is not None:
            doc["first_failure"] = failure.name
            doc["first_failure_detail"] = failure.detail
        return doc

    def dumps(self) -> str:
        return dump_kv(self.to_kv())

    def to_text(self) -> str:
        lines = [
            f"n = {self.n}, m = {self.m}, f(U) = {self.f_total}",
            f"|H| = {self.subgraph.size}, h = {self.h}, gamma = {self.gamma}, S = {{{format_ids(self.certificate.pair.S)}}}, T = {{{format_ids(self.certificate.pair.T)}}}",
        ]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        lines.append("PASS" if self.passed else f"FAIL ({self.first_failure.name})")
        return "\n".join(lines) + "\n"


def verify_minmax(
    G: Multigraph,
    f: Sequence[int],
    limit: int = DEFAULT_LIMIT,
    oracle_edges: int = MAX_BRUTE_EDGES,
    certificate: DeficiencyCertificate | None = None,
) -> VerificationReport:
    """Run the solver and the exhaustive certificate side and cross-check them.

    A supplied ``certificate`` is checked against the recomputed one instead
    of being trusted.
    """
    f = check_weights(G, f)
    f_total = sum(f)
    H = solve_max_fbounded(G, f)
    best_code, gamma, min_schrijver, identity_failures, parity_failures = scan_pairs(G, f, limit)
    computed = max_deficiency(G, f, limit)
    report = VerificationReport(G.n, G.m, f_total, H, certificate or computed)

    report.add("feasible", H.is_f_bounded(f), f"degrees {H.degree} vs bounds {f}")
    report.add(
        "strong_duality",
        H.degree_sum == f_total - gamma,
        f"2|H| = {H.degree_sum}, f(U) - gamma = {f_total - gamma}",
    )
    report.add(
        "schrijver_min",
        H.size == min_schrijver,
        f"|H| = {H.size}, min Schrijver bound = {min_schrijver}",
    )
    report.add("schrijver_identity", identity_failures == 0, f"{identity_failures} pairs violate 2*bound + def = f(U)")
    report.add("parity", parity_failures == 0, f"{parity_failures} pairs with def and f(U) of different parity")
    empty = deficiency(G, f, PartitionPair())
    odd = odd_weight_components(G, f)
    report.add("empty_pair", empty == odd, f"def(empty, empty) = {empty}, odd f-sum components = {odd}")
    report.add("gamma_range", empty <= gamma <= f_total, f"{empty} <= gamma = {gamma} <= f(U) = {f_total}")

    if certificate is not None:
        problems = certificate.check(G, f)
        if certificate.gamma != gamma:
            problems.append(f"claimed gamma {certificate.gamma} but maximum deficiency is {gamma}")
        report.add("certificate", not problems, "; ".join(problems))
    else:
        report.add("certificate", not computed.check(G, f), "")

    if G.m <= oracle_edges:
        brute = brute_force_max_fbounded(G, f, oracle_edges)
        report.add("oracle", brute.size == H.size, f"solver {H.size}, brute force {brute.size}")

    if gamma >= 1:
        aug = augment_with_w(G, f, gamma)
        h_prime = h_value(aug.g_prime, aug.f_prime)
        report.add(
            "augmentation",
            h_prime == sum(aug.f_prime),
            f"h(G', f') = {h_prime}, f'(U') = {sum(aug.f_prime)}",
        )
    return report
