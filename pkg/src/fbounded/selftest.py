"""Randomized invariant battery behind ``fbounded selftest``."""
from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from .formula import DEFAULT_LIMIT, TABLE_LIMIT, deficiency, has_f_factor, pair_table
from .generate import SEED_BITS, selftest_instance
from .matcher import maximum_matching
from .multigraph import Multigraph
from .solver import expand_gadget, verify_minmax


def battery(G: Multigraph, f: Sequence[int], limit: int = DEFAULT_LIMIT) -> dict[str, bool]:
    """Evaluate every invariant on one instance; maps invariant name to outcome."""
    report = verify_minmax(G, f, limit)
    results = {c.name: c.passed for c in report.checks}
    H = report.subgraph
    f_total = report.f_total

    if G.n <= TABLE_LIMIT:
        table = pair_table(G, f)
        results["weak_duality"] = bool((H.degree_sum <= f_total - table.deficiency).all())

    factor = has_f_factor(G, f, limit, method="exhaustive")
    bridge = factor.exists == (H.degree_sum == f_total)
    if not factor.exists:
        bridge = bridge and deficiency(G, f, factor.witness) > 0
    results["f_factor_bridge"] = bridge

    g, _ = expand_gadget(G, f)
    results["gadget_identity"] = maximum_matching(g).size == G.m + H.size
    return results


@dataclass
class SelftestResult:
    count: int
    seed: int
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_selftest(
    count: int = 1000,
    seed: int = 0,
    n_max: int = 7,
    m_max: int = 14,
    fmax: int = 4,
    limit: int = DEFAULT_LIMIT,
    on_failure=None,
) -> SelftestResult:
    """Instance ``i`` uses seed ``(seed + i) mod 2**64``, so a failing
    instance replays alone with ``count=1`` and that seed."""
    result = SelftestResult(count, seed)
    for i in range(count):
        s = (seed + i) % (1 << SEED_BITS)
        G, f = selftest_instance(s, n_max, m_max, fmax)
        for name, ok in battery(G, f, limit).items():
            if ok:
                result.passed[name] += 1
            else:
                result.failed[name] += 1
                result.failures.append((s, name))
                if on_failure is not None:
                    on_failure(s, name)
    return result
