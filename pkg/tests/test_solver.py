import pytest
from hypothesis import given, settings

from fbounded.formula import max_deficiency, pair_table
from fbounded.matcher import maximum_matching
from fbounded.multigraph import InstanceTooLarge, Multigraph
from fbounded.solver import (
    _normalize,
    augment_with_w,
    brute_force_max_fbounded,
    expand_gadget,
    h_value,
    solve_max_fbounded,
    verify_minmax,
)

from conftest import instances, k4, parallel3, star3, triangle


def test_brute_force_examples():
    assert brute_force_max_fbounded(triangle(), (2,) * 3).size == 3
    assert brute_force_max_fbounded(parallel3(), (2, 2)).size == 2
    assert brute_force_max_fbounded(k4(), (0,) * 4).size == 0


def test_brute_force_tie_break_smallest_mask():
    H = brute_force_max_fbounded(triangle(), (1,) * 3)
    assert H.edge_indices == (0,)
    assert brute_force_max_fbounded(parallel3(), (2, 2)).edge_indices == (0, 1)


def test_brute_force_guard():
    G = Multigraph(2, ((0, 1),) * 23)
    with pytest.raises(InstanceTooLarge):
        brute_force_max_fbounded(G, (1, 1))


def test_expand_gadget_examples():
    edge = Multigraph(2, ((0, 1),))
    g, gm = expand_gadget(edge, (1, 1))
    assert (g.n, len(g.edges)) == (4, 3)
    g, gm = expand_gadget(edge, (0, 0))
    assert (g.n, len(g.edges)) == (2, 1)
    g, gm = expand_gadget(triangle(), (1,) * 3)
    assert (g.n, len(g.edges)) == (9, 9)
    assert gm.n_expanded == 9


@given(instances())
def test_gadget_map_shape(data):
    G, f = data
    g, gm = expand_gadget(G, f)
    assert g.n == sum(f) + 2 * G.m == gm.n_expanded
    assert len(g.edges) == sum(1 + f[u] + f[v] for u, v in G.edges)
    for (u, v), (a, b) in zip(G.edges, gm.edge_pairs):
        assert set(g.neighbors[a]) == {b, *gm.copies[u]}
        assert set(g.neighbors[b]) == {a, *gm.copies[v]}


def test_solve_examples():
    H = solve_max_fbounded(triangle(), (2,) * 3)
    assert H.size == 3 and H.degree == (2, 2, 2)
    assert solve_max_fbounded(star3(), (1,) * 4).size == 1
    G = k4()
    assert solve_max_fbounded(G, G.degrees).size == G.m


def test_h_value_examples():
    assert h_value(triangle(), (1,) * 3) == 2
    assert h_value(triangle(), (2,) * 3) == 6
    assert h_value(k4(), (0,) * 4) == 0


def test_normalize_repairs_half_covered_pairs():
    G = Multigraph(2, ((0, 1),))
    g, gm = expand_gadget(G, (1, 1))
    (c0,), (c1,) = gm.copies
    a, b = gm.edge_pairs[0]
    mate = [None] * g.n
    mate[a], mate[c0] = c0, a
    fixed = _normalize(mate, gm)
    assert fixed[a] == b and fixed[c0] is None
    assert _normalize([None] * g.n, gm)[a] == b


def test_augment_examples():
    aug = augment_with_w(triangle(), (1,) * 3, 1)
    assert aug.g_prime.n == 4 and aug.w_id == 3
    assert sorted(tuple(sorted(e)) for e in aug.g_prime.edges) == sorted(
        (u, v) for u in range(4) for v in range(u + 1, 4)
    )
    assert aug.f_prime == (1, 1, 1, 1)
    aug = augment_with_w(Multigraph(1), (0,), 2)
    assert aug.g_prime.edges == ((0, 1), (0, 1)) and aug.f_prime == (0, 2)
    assert augment_with_w(star3(), (1,) * 4, 2).g_prime.m == 11
    with pytest.raises(ValueError):
        augment_with_w(triangle(), (1,) * 3, 0)


@pytest.mark.parametrize(
    "G, f, h, gamma",
    [(triangle(), (1,) * 3, 2, 1), (k4(), (1,) * 4, 4, 0), (parallel3(), (2, 2), 4, 0)],
)
def test_verify_examples(G, f, h, gamma):
    r = verify_minmax(G, f)
    assert r.passed, r.to_text()
    assert (r.h, r.gamma) == (h, gamma)
    names = {c.name for c in r.checks}
    assert ("augmentation" in names) == (gamma >= 1)


def test_verify_flags_corrupted_certificate():
    cert = max_deficiency(triangle(), (1,) * 3)
    bad = type(cert)(cert.pair, cert.gamma + 2, cert.bad_components, cert.f_total)
    r = verify_minmax(triangle(), (1,) * 3, certificate=bad)
    assert not r.passed and r.first_failure.name == "certificate"
    assert "FAIL" in r.to_text() and r.to_kv()["status"] == "FAIL"


@settings(max_examples=150, deadline=None)
@given(instances())
def test_solver_agrees_with_oracle_and_duality(data):
    G, f = data
    H = solve_max_fbounded(G, f)
    assert H.is_f_bounded(f)
    assert H.size == brute_force_max_fbounded(G, f).size
    g, _ = expand_gadget(G, f)
    assert maximum_matching(g).size == G.m + H.size
    table = pair_table(G, f)
    assert (H.degree_sum <= sum(f) - table.deficiency).all()
    assert H.degree_sum == sum(f) - table.deficiency.max()


@settings(max_examples=30, deadline=None)
@given(instances(max_n=12, max_m=40, max_f=5))
def test_feasible_beyond_oracle_limits(data):
    G, f = data
    H = solve_max_fbounded(G, f)
    assert H.is_f_bounded(f)
    assert H.degree_sum == sum(f) - max_deficiency(G, f).gamma
