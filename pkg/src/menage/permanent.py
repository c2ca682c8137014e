"""Exact permanents of square (0,1) matrices."""

from __future__ import annotations

from itertools import permutations

from .matrix import BinaryMatrix

RYSER_MAX_N = 28
BRUTE_MAX_N = 8


def _require_square(m: BinaryMatrix) -> None:
    if not m.is_square:
        raise ValueError(f"permanent needs a square matrix, got {m.rows}x{m.cols}")


def permanent_ryser(m: BinaryMatrix) -> int:
    """Ryser's inclusion-exclusion over column subsets.

    per(M) = (-1)^n * sum_S (-1)^|S| prod_i sum_{j in S} m_ij

    Subsets are walked in Gray-code order so each step adds or removes a
    single column from the running row sums.
    """
    _require_square(m)
    n = m.rows
    if n > RYSER_MAX_N:
        raise ValueError(f"n = {n} exceeds the Ryser limit of {RYSER_MAX_N}")
    if n == 0:
        return 1
    rows = m.to_rows()
    if any(not any(r) for r in rows) or any(not any(c) for c in zip(*rows)):
        return 0

    columns = [[rows[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    in_set = [False] * n
    total = 0
    size = 0
    for step in range(1, 1 << n):
        # index of the bit that flips between gray(step - 1) and gray(step)
        j = (step & -step).bit_length() - 1
        col = columns[j]
        if in_set[j]:
            in_set[j] = False
            size -= 1
            for i in range(n):
                sums[i] -= col[i]
        else:
            in_set[j] = True
            size += 1
            for i in range(n):
                sums[i] += col[i]
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if size & 1 else prod
    return -total if n & 1 else total


def permanent_brute(m: BinaryMatrix) -> int:
    """Sum over all permutations; oracle for small n."""
    _require_square(m)
    n = m.rows
    if n > BRUTE_MAX_N:
        raise ValueError(f"n = {n} exceeds the brute-force limit of {BRUTE_MAX_N}")
    rows = m.to_rows()
    return sum(
        all(rows[i][p[i]] for i in range(n)) for p in permutations(range(n))
    )
