"""Cross-checks of every identity the package relies on, grouped by family.

Each family yields one boolean per individual check so the CLI can report
pass/fail counts.  Nothing here raises on a failed identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .matrix import (
    canonical_staircase,
    complement_in_J,
    cycle_plus_identity,
    disjunct_components,
    menage_matrix,
    minor,
)
from .menage import (
    REFERENCE_U,
    cayley_h,
    fixed_seat_count,
    fixed_seat_minor,
    fixed_seat_permanent,
    fixed_seat_rook_polynomial,
    lemma6_lhs,
    straight_table_count,
    straight_table_permanent,
    submatrix_A,
    submatrix_B,
    touchard_u,
    u_via_permanent,
)
from .permanent import permanent_brute, permanent_ryser
from .problem3 import analyze
from .rook import (
    brute_force_rook_counts,
    permanent_via_rook,
    poly_product,
    rook_polynomial,
    rook_transform,
    shift_add,
    staircase_rook_polynomial,
)

VERIFY_MAX_N = 16
STAIRCASE_MAX_K = 12


@dataclass(frozen=True)
class FamilyResult:
    family: str
    checked: int
    passed: int

    @property
    def failed(self) -> int:
        return self.checked - self.passed


def _chairs(max_n: int, least: int = 3) -> Iterator[tuple[int, int]]:
    for n in range(least, max_n + 1):
        for r in range(3, n + 1):
            yield n, r


def _sequence(max_n):
    for n in range(2, max_n + 1):
        u = touchard_u(n)
        ok = u == cayley_h(n) == u_via_permanent(n)
        if n - 2 < len(REFERENCE_U):
            ok = ok and u == REFERENCE_U[n - 2]
        yield ok


def _minor_identity(max_n):
    for n, r in _chairs(max_n):
        yield fixed_seat_count(n, r) == fixed_seat_permanent(n, r)


def _symmetry(max_n):
    for n, r in _chairs(max_n):
        yield fixed_seat_count(n, r) == fixed_seat_count(n, n - r + 3)


def _row_expansion(max_n):
    for n in range(3, max_n + 1):
        yield sum(fixed_seat_count(n, r) for r in range(3, n + 1)) == touchard_u(n)


def _lemma6(max_n):
    for n in range(3, max_n + 1):
        yield lemma6_lhs(n) == fixed_seat_count(n, 3)


def _rook_bridge(max_n):
    for n, r in _chairs(max_n):
        yield rook_transform(fixed_seat_rook_polynomial(n, r), n - 1) == fixed_seat_count(n, r)


def _fixed_seat_polynomial(max_n):
    for n, r in _chairs(max_n):
        yield fixed_seat_rook_polynomial(n, r) == rook_polynomial(fixed_seat_minor(n, r))


def _staircase_factors(max_n):
    for n, r in _chairs(max_n):
        first = staircase_rook_polynomial(2 * r - 5)
        rest_a = staircase_rook_polynomial(max(2 * (n - r) - 1, 0))
        rest_b = staircase_rook_polynomial(2 * (n - r))
        yield rook_polynomial(submatrix_A(n, r)) == poly_product(first, rest_a)
        yield rook_polynomial(submatrix_B(n, r)) == poly_product(first, rest_b)


def _deletion_step(max_n):
    for n, r in _chairs(max_n):
        step = shift_add(rook_polynomial(submatrix_A(n, r)), rook_polynomial(submatrix_B(n, r)))
        yield step == fixed_seat_rook_polynomial(n, r)


def _decomposition(max_n):
    for n, r in _chairs(max_n):
        sizes_a = [c.ones_count for c in disjunct_components(submatrix_A(n, r))]
        sizes_b = [c.ones_count for c in disjunct_components(submatrix_B(n, r))]
        want_a = [k for k in (2 * r - 5, 2 * (n - r) - 1) if k > 0]
        want_b = [k for k in (2 * r - 5, 2 * (n - r)) if k > 0]
        yield sizes_a == want_a and sizes_b == want_b


def _complement(max_n):
    for n, r in _chairs(max_n):
        yield complement_in_J(minor(menage_matrix(n), 1, r)) == minor(cycle_plus_identity(n), 1, r)


def _straight_table(max_n):
    for n, r in _chairs(max_n):
        yield straight_table_count(n, r) == straight_table_permanent(n, r)


def _lemma2(max_n):
    for n in range(2, min(max_n, 8) + 1):
        yield permanent_via_rook(cycle_plus_identity(n), n) == permanent_brute(menage_matrix(n))


def _brute_permanent(max_n):
    for n in range(2, min(max_n, 8) + 1):
        yield permanent_brute(menage_matrix(n)) == permanent_ryser(menage_matrix(n))
    for n, r in _chairs(min(max_n, 8)):
        m = minor(menage_matrix(n), 1, r)
        yield permanent_brute(m) == permanent_ryser(m)


def _staircases(max_n):
    if max_n < 2:
        return
    for k in range(1, STAIRCASE_MAX_K + 1):
        m = canonical_staircase(k)
        yield rook_polynomial(m) == brute_force_rook_counts(m) == staircase_rook_polynomial(k)


def _problem3(max_n):
    for n in range(3, max_n + 1):
        # Problem3Report checks its own invariants on construction
        try:
            half, full = analyze(n), analyze(n, full=True)
        except ValueError:
            yield False
            continue
        yield half == full and (half.divides or not half.is_constant)


FAMILIES: dict[str, Callable[[int], Iterator[bool]]] = {
    "sequence": _sequence,
    "minor_identity": _minor_identity,
    "symmetry": _symmetry,
    "row_expansion": _row_expansion,
    "lemma6": _lemma6,
    "rook_bridge": _rook_bridge,
    "fixed_seat_polynomial": _fixed_seat_polynomial,
    "staircase_factors": _staircase_factors,
    "deletion_step": _deletion_step,
    "decomposition": _decomposition,
    "complement": _complement,
    "straight_table": _straight_table,
    "lemma2_bridge": _lemma2,
    "brute_permanent": _brute_permanent,
    "staircase_lemma": _staircases,
    "problem3": _problem3,
}


def run_verification(max_n: int) -> list[FamilyResult]:
    if max_n > VERIFY_MAX_N:
        raise ValueError(f"max_n = {max_n} exceeds the verify limit of {VERIFY_MAX_N}")
    results = []
    for name, family in FAMILIES.items():
        outcomes = list(family(max_n))
        results.append(FamilyResult(name, len(outcomes), sum(outcomes)))
    return results
