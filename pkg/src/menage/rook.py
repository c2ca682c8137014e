"""Rook polynomials of (0,1) matrices.

``rook_polynomial`` splits a board into disjunct components (their
polynomials multiply) and runs the deletion recursion

    R_M(x) = x * R_{M minus row i, col j} + R_{M with (i,j) zeroed}

inside each component.  ``brute_force_rook_counts`` is an independent
enumeration used as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from .matrix import BinaryMatrix, disjunct_components, minor, zero_entry

BRUTE_FORCE_MAX_ONES = 24


@lru_cache(maxsize=None)
def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 for b < 0 or b > a; a must be >= 0."""
    if a < 0:
        raise ValueError(f"binom needs a >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=None)
def fact(n: int) -> int:
    return factorial(n)


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RookPolynomial:
    """Coefficients nu_0, nu_1, ... with nu_0 = 1, trailing zeros dropped."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        coeffs = _trim(int(c) for c in coefficients)
        if not coeffs or coeffs[0] != 1:
            raise ValueError(f"rook polynomial must start with 1, got {coeffs}")
        if any(c < 0 for c in coeffs):
            raise ValueError(f"negative coefficient in {coeffs}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, j: int) -> int:
        return self.coefficients[j] if 0 <= j < len(self.coefficients) else 0

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, RookPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return self.coefficients == _trim(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __mul__(self, other: "RookPolynomial") -> "RookPolynomial":
        return poly_product(self, other)

    def __call__(self, x):
        return sum(c * x ** j for j, c in enumerate(self.coefficients))

    def __repr__(self) -> str:
        return f"RookPolynomial({list(self.coefficients)})"


ONE = RookPolynomial([1])


def _convolve(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_product(p: RookPolynomial, q: RookPolynomial) -> RookPolynomial:
    return RookPolynomial(_convolve(p.coefficients, q.coefficients))


def shift_add(shifted: RookPolynomial, other: RookPolynomial) -> RookPolynomial:
    """x * shifted + other."""
    a = (0,) + shifted.coefficients
    b = other.coefficients
    size = max(len(a), len(b))
    return RookPolynomial(
        (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size)
    )


def staircase_rook_polynomial(k: int) -> RookPolynomial:
    """Shared rook polynomial of every k-staircase: nu_i = C(k - i + 1, i)."""
    if k < 0:
        raise ValueError(f"staircase size must be >= 0, got {k}")
    return RookPolynomial(binom(k - i + 1, i) for i in range((k + 1) // 2 + 1))


def rook_polynomial(m: BinaryMatrix) -> RookPolynomial:
    memo: dict[BinaryMatrix, RookPolynomial] = {}

    def connected(c: BinaryMatrix) -> RookPolynomial:
        hit = memo.get(c)
        if hit is None:
            i, j = c.ones()[0]
            hit = shift_add(total(minor(c, i, j)), total(zero_entry(c, i, j)))
            memo[c] = hit
        return hit

    def total(b: BinaryMatrix) -> RookPolynomial:
        result = ONE
        for comp in disjunct_components(b):
            result = poly_product(result, connected(comp))
        return result

    return total(m)


def deletion_step(m: BinaryMatrix, i: int, j: int) -> RookPolynomial:
    """One deletion step at the 1-cell (i, j), finishing each branch with
    ``rook_polynomial``.  Equal to ``rook_polynomial(m)`` for any pivot."""
    return shift_add(rook_polynomial(minor(m, i, j)), rook_polynomial(zero_entry(m, i, j)))


def brute_force_rook_counts(m: BinaryMatrix) -> RookPolynomial:
    """Count non-attacking placements by exhaustive backtracking."""
    ones = m.ones()
    if len(ones) > BRUTE_FORCE_MAX_ONES:
        raise ValueError(
            f"{len(ones)} ones exceeds the brute-force limit of {BRUTE_FORCE_MAX_ONES}"
        )
    counts = [0] * (min(m.rows, m.cols) + 1)

    def place(start: int, used_rows: frozenset, used_cols: frozenset, depth: int):
        counts[depth] += 1
        for t in range(start, len(ones)):
            i, j = ones[t]
            if i not in used_rows and j not in used_cols:
                place(t + 1, used_rows | {i}, used_cols | {j}, depth + 1)

    place(0, frozenset(), frozenset(), 0)
    return RookPolynomial(counts)


def permanent_via_rook(m: BinaryMatrix, n: int) -> int:
    """per(J_n - M) = sum_j (-1)^j nu_j(M) (n - j)!"""
    if not m.is_square:
        raise ValueError(f"matrix must be square, got {m.rows}x{m.cols}")
    if m.rows != n:
        raise ValueError(f"matrix is {m.rows}x{m.cols}, expected n = {n}")
    return rook_transform(rook_polynomial(m), n)


def rook_transform(p: RookPolynomial, n: int) -> int:
    return sum((-1) ** j * c * fact(n - j) for j, c in enumerate(p.coefficients) if j <= n)
