import pytest
from hypothesis import given, settings, strategies as st

from hermitian_cascade import _kernels_py, kernels
from hermitian_cascade.linalg import (RationalMatrix, intersection_basis, intersection_dim,
                                      span_rank)

matrices = st.integers(1, 9).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                       min_size=1, max_size=9))


def test_frozen_ranks():
    assert _kernels_py.rank_int([[1, 2], [2, 4]]) == 1
    assert _kernels_py.rank_int([[0, 0], [0, 0]]) == 0
    assert _kernels_py.rank_int([]) == 0
    assert kernels.rank_int([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3


def test_use_backend_round_trip():
    old = kernels.use_backend("python")
    try:
        assert kernels.BACKEND == "python"
    finally:
        kernels.use_backend(old)
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="extension not built")
@settings(max_examples=300, deadline=None)
@given(matrices)
def test_backends_agree(rows):
    cy = kernels.BACKENDS["cython"]
    assert cy.rank_int(rows) == _kernels_py.rank_int(rows)
    t = [list(c) for c in zip(*rows)]
    assert cy.matmul_int(rows, t) == _kernels_py.matmul_int(rows, t)


@pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="extension not built")
def test_overflow_falls_back():
    big = [[2 ** 61 + i * j for j in range(5)] for i in range(5)]
    huge = [[(i + 1) ** (j + 12) for j in range(14)] for i in range(14)]
    for m in (big, huge):
        assert kernels.BACKENDS["cython"].rank_int(m) == _kernels_py.rank_int(m)
    assert _kernels_py.rank_int(huge) == 14


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_nullity(rows):
    m = RationalMatrix.of(rows)
    assert m.rank() + len(m.nullspace()) == m.ncols
    assert m.rank() == m.transpose().rank() == len(m.column_space())
    for v in m.nullspace():
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=80, deadline=None)
@given(matrices, matrices)
def test_intersection_dimension(a, b):
    n = min(len(a[0]), len(b[0]))
    a, b = [r[:n] for r in a], [r[:n] for r in b]
    assert len(intersection_basis(a, b, n)) == intersection_dim(a, b, n)
    assert intersection_dim(a, a, n) == span_rank(a, n)


def test_matrix_ops():
    m = RationalMatrix.of([[0, 1], [0, 0]])
    assert (m ** 2).is_zero() and not m.is_zero()
    assert (m + RationalMatrix.identity(2)) @ RationalMatrix.identity(2) == m + RationalMatrix.identity(2)
    with pytest.raises(ValueError):
        m @ RationalMatrix.zeros(3, 1)
    with pytest.raises(ValueError):
        RationalMatrix.of([[1, 2], [3]])


def test_fallback_selected_without_extension():
    import subprocess
    import sys

    code = ("import sys; sys.modules['hermitian_cascade._kernels'] = None\n"
            "from hermitian_cascade import kernels\n"
            "from hermitian_cascade.octonion_e6 import run_octonion_suite\n"
            "assert kernels.BACKEND == 'python' and 'cython' not in kernels.BACKENDS\n"
            "assert run_octonion_suite(seed=3, trials=40, pencils=4, pairs=4)['passed']\n")
    subprocess.run([sys.executable, "-c", code], check=True)


def test_python_backend_end_to_end():
    from hermitian_cascade.octonion_e6 import E1Vector, SplitOctonion, filtration_dims

    old = kernels.use_backend("python")
    try:
        x = E1Vector(SplitOctonion.one(), SplitOctonion.zero())
        assert filtration_dims(x) == (1, 8, 1)
    finally:
        kernels.use_backend(old)
