# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels with an int64 fast path.

Elimination runs on machine integers with checked multiplication and
subtraction; the first overflow hands the original matrix to the
arbitrary-precision implementation.
"""
from libc.stdint cimport int64_t
from cython.view cimport array as cvarray

from . import _kernels_py

cdef extern from *:
    bint __builtin_mul_overflow(int64_t a, int64_t b, int64_t *res) nogil
    bint __builtin_sub_overflow(int64_t a, int64_t b, int64_t *res) nogil

cdef int64_t _LIMIT = 2 ** 62


cdef Py_ssize_t _bareiss(int64_t[:, :] m, Py_ssize_t nrows, Py_ssize_t ncols) nogil:
    """Rank, or -1 on overflow."""
    cdef Py_ssize_t rank = 0, i, j, col, piv
    cdef int64_t prev = 1, p, a, t, x, y
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if m[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                t = m[rank, j]
                m[rank, j] = m[piv, j]
                m[piv, j] = t
        p = m[rank, col]
        for i in range(rank + 1, nrows):
            a = m[i, col]
            for j in range(col + 1, ncols):
                if __builtin_mul_overflow(p, m[i, j], &x):
                    return -1
                if __builtin_mul_overflow(a, m[rank, j], &y):
                    return -1
                if __builtin_sub_overflow(x, y, &t):
                    return -1
                # exact division: the quotient is a minor of the input
                m[i, j] = t // prev
            m[i, col] = 0
        prev = p
        rank += 1
    return rank


def rank_int(list rows):
    if not rows or not rows[0]:
        return 0
    cdef Py_ssize_t nrows = len(rows), ncols = len(rows[0]), i, j
    m = cvarray(shape=(nrows, ncols), itemsize=sizeof(int64_t), format="q")
    cdef int64_t[:, :] mv = m
    for i in range(nrows):
        r = rows[i]
        for j in range(ncols):
            x = r[j]
            if x >= _LIMIT or x <= -_LIMIT:
                return _kernels_py.rank_int(rows)
            mv[i, j] = x
    cdef Py_ssize_t rank
    with nogil:
        rank = _bareiss(mv, nrows, ncols)
    if rank < 0:
        return _kernels_py.rank_int(rows)
    return rank


def matmul_int(list a, list b):
    cdef Py_ssize_t n = len(a), k = len(b), mcols = len(b[0]) if b else 0
    cdef Py_ssize_t i, j, l
    out = []
    for i in range(n):
        ra = a[i]
        row = []
        for j in range(mcols):
            acc = 0
            for l in range(k):
                x = ra[l]
                if x:
                    acc += x * b[l][j]
            row.append(acc)
        out.append(row)
    return out
