"""Menage numbers and fixed-seat counts.

``n`` is always the total number of couples, the mathematician's included;
he is man 1 and his wife's chair is 1-bar, so picking chair ``r`` puts him at
distance ``r - 1`` from her.  Valid chairs are ``3 <= r <= n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .matrix import (
    BinaryMatrix,
    complement_in_J,
    cycle_plus_identity,
    menage_matrix,
    minor,
    zero_entry,
)
from .permanent import permanent_ryser
from .rook import RookPolynomial, binom, fact, rook_transform

REFERENCE_U = (0, 1, 2, 13, 80, 579, 4738, 43387, 439792, 4890741, 59216642)
"""U_2 .. U_12."""


def _check_n(n: int, least: int) -> None:
    if n < least:
        raise ValueError(f"n must be >= {least}, got {n}")


def _check_chair(n: int, r: int) -> None:
    _check_n(n, 3)
    if not 3 <= r <= n:
        raise ValueError(f"chair r must lie in [3, {n}], got {r}")


def touchard_u(n: int) -> int:
    _check_n(n, 2)
    total = 0
    for k in range(n + 1):
        num = 2 * n * binom(2 * n - k, k)
        weight, rem = divmod(num, 2 * n - k)
        assert rem == 0, f"inexact Touchard term at n={n}, k={k}"
        total += (-1) ** k * weight * fact(n - k)
    return total


def cayley_h(n: int) -> int:
    """(n-2) H_n = n(n-2) H_{n-1} + n H_{n-2} + 4(-1)^(n+1), H_2 = 0, H_3 = 1."""
    _check_n(n, 2)
    h_prev, h = 0, 1  # H_2, H_3
    if n == 2:
        return h_prev
    for m in range(4, n + 1):
        num = m * (m - 2) * h + m * h_prev + 4 * (-1) ** (m + 1)
        nxt, rem = divmod(num, m - 2)
        assert rem == 0, f"inexact Cayley step at n={m}"
        h_prev, h = h, nxt
    return h


def u_via_permanent(n: int) -> int:
    _check_n(n, 2)
    return permanent_ryser(menage_matrix(n))


def menage_total(n: int) -> int:
    """M_n = 2 n! U_n."""
    _check_n(n, 3)
    return 2 * fact(n) * touchard_u(n)


def fixed_seat_minor(n: int, r: int) -> BinaryMatrix:
    """(I_n + P)[1|r], the forbidden cells once man 1 holds chair r."""
    _check_chair(n, r)
    return minor(cycle_plus_identity(n), 1, r)


def submatrix_A(n: int, r: int) -> BinaryMatrix:
    return minor(fixed_seat_minor(n, r), n - 1, 1)


def submatrix_B(n: int, r: int) -> BinaryMatrix:
    return zero_entry(fixed_seat_minor(n, r), n - 1, 1)


def _fixed_seat_inner(n: int, r: int, k: int) -> int:
    lo, hi = max(r + k - n - 1, 0), min(k, r - 2)
    return sum(
        binom(2 * r - i - 4, i) * binom(2 * (n - r) - k + i + 2, k - i)
        for i in range(lo, hi + 1)
    )


def fixed_seat_rook_polynomial(n: int, r: int) -> RookPolynomial:
    _check_chair(n, r)
    return RookPolynomial(_fixed_seat_inner(n, r, k) for k in range(n))


def fixed_seat_count(n: int, r: int) -> int:
    """Seatings of the other n - 1 men once man 1 sits in chair r."""
    _check_chair(n, r)
    return sum(
        (-1) ** k * fact(n - k - 1) * _fixed_seat_inner(n, r, k) for k in range(n)
    )


def straight_table_count(n: int, r: int) -> int:
    """Fixed-seat count when the table is straight (man n may take chair 1)."""
    _check_chair(n, r)
    total = 0
    for k in range(n - 1):
        lo, hi = max(r + k - n, 0), min(k, r - 2)
        inner = sum(
            binom(2 * r - i - 4, i) * binom(2 * (n - r) - k + i + 1, k - i)
            for i in range(lo, hi + 1)
        )
        total += (-1) ** k * fact(n - k - 1) * inner
    return total


def straight_table_permanent(n: int, r: int) -> int:
    return permanent_ryser(complement_in_J(submatrix_B(n, r)))


def _b_coefficient(n: int, k: int) -> int:
    lo, hi = max(k - n + 2, 0), min(k, 1)
    return sum(binom(2 - i, i) * binom(2 * n - 4 - k + i, k - i) for i in range(lo, hi + 1))


def lemma6_lhs(n: int) -> int:
    """sum_{k=0}^{n-3} (-1)^k C(2n-k-4, k) (n-k-2)! (n-k-2).

    The expanded form sum_k (-1)^k (n-k-1)! B_{n,k}, with B_{n,k} the r = 3
    inner sums, is evaluated alongside and must agree.
    """
    _check_n(n, 3)
    reduced = sum(
        (-1) ** k * binom(2 * n - k - 4, k) * fact(n - k - 2) * (n - k - 2)
        for k in range(n - 2)
    )
    expanded = sum((-1) ** k * fact(n - k - 1) * _b_coefficient(n, k) for k in range(n))
    assert reduced == expanded, f"reduced and expanded forms differ at n={n}"
    return reduced


@dataclass(frozen=True)
class MenageRecord:
    n: int
    u_touchard: int
    u_cayley: int
    u_permanent: int
    m_total: int

    def __post_init__(self):
        if not self.u_touchard == self.u_cayley == self.u_permanent:
            raise ValueError(f"U_{self.n} methods disagree: {self}")
        if self.m_total != 2 * fact(self.n) * self.u_touchard:
            raise ValueError(f"M_{self.n} inconsistent with U_{self.n}")


def menage_record(n: int) -> MenageRecord:
    return MenageRecord(n, touchard_u(n), cayley_h(n), u_via_permanent(n), menage_total(n))


@dataclass(frozen=True)
class FixedSeatRecord:
    n: int
    r: int
    count_formula: int
    count_permanent: int
    distance: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "distance", self.r - 1)
        if self.count_formula != self.count_permanent:
            raise ValueError(f"fixed-seat methods disagree: {self}")


def fixed_seat_permanent(n: int, r: int) -> int:
    _check_chair(n, r)
    return permanent_ryser(minor(menage_matrix(n), 1, r))


def fixed_seat_record(n: int, r: int) -> FixedSeatRecord:
    return FixedSeatRecord(n, r, fixed_seat_count(n, r), fixed_seat_permanent(n, r))
