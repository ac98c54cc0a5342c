"""Pure-Python integer kernels; reference implementation for ``_kernels``."""
from __future__ import annotations


def rank_int(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            a = m[i][col]
            ri, rr = m[i], m[rank]
            for j in range(col + 1, ncols):
                ri[j] = (p * ri[j] - a * rr[j]) // prev
            ri[col] = 0
        prev = p
        rank += 1
    return rank


def matmul_int(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, c)) for c in cols] for row in a]
