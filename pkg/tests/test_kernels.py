"""Parity between the compiled kernels and the pure-Python twins."""

import numpy as np
import pytest

from skewbrace import kernels
from skewbrace.counting import pair_context
from skewbrace.groups import GroupDescriptor, canonicalize, enumerate_groups
from skewbrace.holomorph import hol_tables
from skewbrace.oracle.partition import prime_partition
from skewbrace.oracle.subgroups import _generic_candidates

has_compiled = True
try:
    from skewbrace import _fastcore
except ImportError:
    has_compiled = False

pure = kernels.pure

needs_compiled = pytest.mark.skipif(not has_compiled, reason="compiled kernel unavailable")


def _scan_args(A):
    T = hol_tables(A)
    cands = _generic_candidates(T)
    total = kernels.pair_count(len(cands))
    return (T.mulA, T.autact, T.autcomp, T.n, T.n_aut, T.id_spos, cands), total


@needs_compiled
@pytest.mark.parametrize("n", [6, 10, 14])
def test_pair_scan_parity(n):
    for A in enumerate_groups(n):
        args, total = _scan_args(A)
        assert pure.generator_pair_scan(*args, 0, total) == _fastcore.generator_pair_scan(*args, 0, total)


@needs_compiled
def test_pair_scan_chunking_is_stable():
    A = GroupDescriptor(2, 3, 2)
    args, total = _scan_args(A)
    whole = _fastcore.generator_pair_scan(*args, 0, total)
    merged = set()
    cut = total // 3
    for lo, hi in ((0, cut), (cut, 2 * cut), (2 * cut, total)):
        merged.update(_fastcore.generator_pair_scan(*args, lo, hi))
    assert sorted(merged) == whole


def _relation_scan_args(M, A, h=1):
    T = hol_tables(A)
    ctx = pair_context(M, A)
    part = prime_partition(M, A, h)
    units_arr = np.asarray(T.units, dtype=np.int64)
    return (
        T.mulA, T.autact, T.autcomp, T.invA, T.autinv,
        T.n, T.d, T.e, ctx.g, T.n_aut, T.phi_e, units_arr, T.id_spos,
        ctx.gamma, ctx.zeta * ctx.delta, part.kappa_h,
    )


@needs_compiled
def test_relation_scan_parity():
    cases = [
        (GroupDescriptor(2, 3, 2), GroupDescriptor(2, 3, 2)),
        (GroupDescriptor(1, 6, 1), GroupDescriptor(2, 3, 2)),
        (GroupDescriptor(2, 3, 2), GroupDescriptor(1, 6, 1)),
        (canonicalize(2, 5, 4), canonicalize(2, 5, 4)),
    ]
    for M, A in cases:
        args = _relation_scan_args(M, A)
        assert pure.quintuple_relation_scan(*args) == list(_fastcore.quintuple_relation_scan(*args))


@needs_compiled
def test_close_generator_pairs_parity():
    A = GroupDescriptor(2, 3, 2)
    T = hol_tables(A)
    pairs = [(i % T.n_hol, (7 * i + 3) % T.n_hol) for i in range(40)]
    a = pure.close_generator_pairs(T.mulA, T.autact, T.autcomp, T.n, T.n_aut, T.id_spos, pairs, T.n)
    b = _fastcore.close_generator_pairs(T.mulA, T.autact, T.autcomp, T.n, T.n_aut, T.id_spos, pairs, T.n)
    assert a == b


def test_backend_forced_pure(monkeypatch):
    import importlib

    monkeypatch.setenv("SKEWBRACE_PURE", "1")
    import skewbrace.kernels as km

    reloaded = importlib.reload(km)
    try:
        assert reloaded.BACKEND == "pure"
    finally:
        monkeypatch.delenv("SKEWBRACE_PURE")
        importlib.reload(km)


def test_get_backend_names():
    assert kernels.get_backend("pure").BACKEND_NAME == "pure"
    if has_compiled:
        assert kernels.get_backend("compiled").BACKEND_NAME == "compiled"
    with pytest.raises(ValueError):
        kernels.get_backend("nope")
