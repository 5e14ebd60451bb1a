"""Both kernel backends must agree exactly."""
import numpy as np
import pytest
from hypothesis import given, settings

from fbounded import kernels
from fbounded._jit import HAS_NUMBA, backend

from conftest import instances


def arrays(G, f):
    eu, ev = G.endpoints
    return G.n, eu, ev, np.asarray(f, dtype=np.int64)


def test_backend_reported():
    assert backend() in {"numba", "numpy"}
    assert (kernels.pair_table is kernels.pair_table_numba) == HAS_NUMBA


@settings(max_examples=80, deadline=None)
@given(instances(max_n=6, max_m=12))
def test_pair_table_backends_agree(data):
    args = arrays(*data)
    for a, b in zip(kernels.pair_table_numba(*args), kernels.pair_table_numpy(*args)):
        np.testing.assert_array_equal(a, b)


@settings(max_examples=80, deadline=None)
@given(instances(max_n=7, max_m=12))
def test_scan_backends_agree(data):
    args = arrays(*data)
    nb = tuple(int(x) for x in kernels.scan_pairs_numba(*args))
    assert nb == kernels.scan_pairs_numpy(*args)


@settings(max_examples=80, deadline=None)
@given(instances(max_n=6, max_m=12))
def test_subset_backends_agree(data):
    args = arrays(*data)
    nb = tuple(int(x) for x in kernels.best_subset_numba(*args))
    assert nb == kernels.best_subset_numpy(*args)


def test_numpy_scan_crosses_chunks(monkeypatch):
    monkeypatch.setattr(kernels, "_CHUNK", 7)
    from conftest import star3

    args = arrays(star3(), (1, 1, 1, 1))
    assert kernels.scan_pairs_numpy(*args)[:2] == (1, 2)
    assert kernels.best_subset_numpy(*args) == (1, 1)


@pytest.mark.skipif(not HAS_NUMBA, reason="numba backend disabled")
def test_blossom_python_path_matches_jit():
    from fbounded.matcher import SimpleGraph
    from conftest import petersen_edges

    g = SimpleGraph.from_edges(10, petersen_edges())
    indptr, indices = g.csr
    jit = kernels.blossom_matching(g.n, indptr, indices)
    py = kernels.blossom_matching.py_func(g.n, indptr, indices)
    np.testing.assert_array_equal(jit, py)
