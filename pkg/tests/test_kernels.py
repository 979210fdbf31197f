"""Backend parity: the numba kernels and the numpy fallback must agree
bit-for-bit, and both must agree with the plain library implementation."""

import pytest

import critigraph as cg
from critigraph._kernels import load_backend
from critigraph.errors import ValidationError

from conftest import decode_mask

numba_backend = load_backend("numba")
numpy_backend = load_backend("numpy")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_classify_parity_full_space(n):
    total = 1 << n * (n - 1)
    a = numba_backend.classify_chunk(n, 0, total)
    b = numpy_backend.classify_chunk(n, 0, total)
    assert (a == b).all()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_search_parity_full_space(n):
    total = 1 << n * (n - 1)
    enforce = 3 <= n <= 5
    assert numba_backend.search_chunk(n, 0, total, enforce) == \
        numpy_backend.search_chunk(n, 0, total, enforce)


def test_parity_on_n5_windows():
    # spot-check assorted windows of the 2^20 space, including ones that
    # straddle the numpy block boundary
    windows = [(0, 4096), (70000, 8192), ((1 << 16) - 100, 200), ((1 << 20) - 4096, 4096)]
    for start, count in windows:
        a = numba_backend.classify_chunk(5, start, count)
        b = numpy_backend.classify_chunk(5, start, count)
        assert (a == b).all(), (start, count)
        assert numba_backend.search_chunk(5, start, count, True) == \
            numpy_backend.search_chunk(5, start, count, True)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_flags_match_library(n):
    flags = numba_backend.classify_chunk(n, 0, 1 << n * (n - 1))
    for mask, flag in enumerate(flags):
        d = decode_mask(n, mask)
        if flag == 0:
            assert not cg.is_strongly_connected(d)
        elif flag == 1:
            assert cg.is_strongly_connected(d)
            assert not cg.is_vertex_critical(d)
        else:
            assert cg.is_vertex_critical(d)


def test_search_counts_match_flags():
    n = 4
    total = 1 << 12
    flags = numba_backend.classify_chunk(n, 0, total)
    max_e, witness, attain, crit, sc, viol = numba_backend.search_chunk(
        n, 0, total, True
    )
    assert crit == int((flags == 2).sum())
    assert sc == int((flags >= 1).sum())
    assert viol == -1
    crit_masks = [m for m in range(total) if flags[m] == 2]
    edge_counts = [m.bit_count() for m in crit_masks]
    assert max_e == max(edge_counts)
    assert attain == edge_counts.count(max_e)
    assert witness == min(
        m for m, e in zip(crit_masks, edge_counts) if e == max_e
    )


def test_load_backend_rejects_unknown():
    with pytest.raises(ValidationError):
        load_backend("fortran")


def test_env_var_selects_backend(monkeypatch):
    monkeypatch.setenv("CRITIGRAPH_BACKEND", "numpy")
    assert load_backend().NAME == "numpy"
    monkeypatch.setenv("CRITIGRAPH_BACKEND", "numba")
    assert load_backend().NAME == "numba"
    monkeypatch.delenv("CRITIGRAPH_BACKEND")
    assert load_backend().NAME in ("numba", "numpy")
