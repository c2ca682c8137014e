import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from menage.matrix import (
    BinaryMatrix,
    block_diagonal,
    canonical_staircase,
    complement_in_J,
    cycle_plus_identity,
    identity,
    minor,
    zero_entry,
)
from menage.permanent import permanent_brute
from menage.rook import (
    ONE,
    RookPolynomial,
    binom,
    brute_force_rook_counts,
    deletion_step,
    permanent_via_rook,
    poly_product,
    rook_polynomial,
    staircase_rook_polynomial,
)

from oracles import rook_counts_by_subsets
from paper_matrices import A1_5, A2_10_5, B1_5, B2_10_5, STAIRCASES_5, STAIRCASES_6
from test_matrix import binary_matrices

M = BinaryMatrix.from_rows


def square_matrices(n):
    cells = st.lists(st.integers(0, 1), min_size=n * n, max_size=n * n)
    return cells.map(lambda c: BinaryMatrix(n, n, tuple(c)))


def orientations(m):
    """The eight images of m under transposition and row/column reversal."""
    out = []
    for base in (m, m.transpose()):
        rows = list(range(1, base.rows + 1))
        cols = list(range(1, base.cols + 1))
        for rr, cc in itertools.product((rows, rows[::-1]), (cols, cols[::-1])):
            out.append(base.permute(rr, cc))
    return out


def test_binom_convention():
    assert binom(5, -1) == 0
    assert binom(3, 4) == 0
    assert binom(6, 2) == 15
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_polynomial_normalizes():
    assert RookPolynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert RookPolynomial([1, 2]) == [1, 2, 0]
    assert RookPolynomial([1, 3, 1])(1) == 5
    assert RookPolynomial([1, 2])[7] == 0
    with pytest.raises(ValueError):
        RookPolynomial([0, 1])
    with pytest.raises(ValueError):
        RookPolynomial([1, -1])


def test_rook_polynomial_basic():
    assert rook_polynomial(BinaryMatrix.zeros(3, 4)) == ONE
    assert rook_polynomial(M([])) == ONE
    assert rook_polynomial(identity(2)) == [1, 2, 1]
    assert rook_polynomial(identity(3)) == [1, 3, 3, 1]
    # oracle: all 5-cell subsets enumerated outside the package
    assert rook_counts_by_subsets(canonical_staircase(5).to_rows()) == [1, 5, 6, 1]
    assert rook_polynomial(canonical_staircase(5)) == [1, 5, 6, 1]


def test_staircase_formula():
    assert staircase_rook_polynomial(0) == ONE
    assert staircase_rook_polynomial(1) == [1, 1]
    assert staircase_rook_polynomial(5) == [1, 5, 6, 1]
    with pytest.raises(ValueError):
        staircase_rook_polynomial(-1)


@pytest.mark.parametrize("k", range(1, 13))
def test_all_staircase_orientations_share_polynomial(k):
    want = staircase_rook_polynomial(k)
    for variant in orientations(canonical_staircase(k)):
        assert rook_polynomial(variant) == want
    assert brute_force_rook_counts(canonical_staircase(k)) == want


def test_paper_staircase_gallery():
    for rows in STAIRCASES_5:
        m = M(rows)
        assert rook_polynomial(m) == brute_force_rook_counts(m) == staircase_rook_polynomial(5)
    for rows in STAIRCASES_6:
        m = M(rows)
        assert rook_polynomial(m) == brute_force_rook_counts(m) == staircase_rook_polynomial(6)


def test_paper_components_are_staircases():
    assert rook_polynomial(M(A1_5)) == staircase_rook_polynomial(5)
    assert rook_polynomial(M(A2_10_5)) == staircase_rook_polynomial(9)
    assert rook_polynomial(M(B1_5)) == staircase_rook_polynomial(5)
    assert rook_polynomial(M(B2_10_5)) == staircase_rook_polynomial(10)
    # the displayed variants are orientations of the canonical form
    assert M(A2_10_5) in orientations(canonical_staircase(9))
    assert M(B2_10_5) in orientations(canonical_staircase(10))


def test_poly_product():
    p = staircase_rook_polynomial(7)
    assert poly_product(p, ONE) == p
    assert poly_product(RookPolynomial([1, 1]), RookPolynomial([1, 1])) == rook_polynomial(identity(2))
    s3 = staircase_rook_polynomial(3)
    two_blocks = block_diagonal(canonical_staircase(3), canonical_staircase(3))
    assert poly_product(s3, s3) == brute_force_rook_counts(two_blocks)
    assert s3 * s3 == rook_polynomial(two_blocks)


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_rook_counts(BinaryMatrix(5, 5, (1,) * 25))
    assert brute_force_rook_counts(BinaryMatrix.zeros(2, 2)) == ONE


def test_brute_force_matches_subset_oracle():
    rng = np.random.default_rng(7)
    for _ in range(40):
        rows = (rng.random((4, 4)) < 0.4).astype(int)
        assert list(brute_force_rook_counts(M(rows))) == rook_counts_by_subsets(rows.tolist())


def test_random_5x5_against_brute_force():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        ones = rng.integers(0, 13)
        cells = np.zeros(25, dtype=int)
        cells[rng.choice(25, size=ones, replace=False)] = 1
        m = M(cells.reshape(5, 5))
        assert rook_polynomial(m) == brute_force_rook_counts(m)


@settings(max_examples=80, deadline=None)
@given(binary_matrices(max_rows=5, max_cols=5))
def test_rook_polynomial_matches_oracle(m):
    assert rook_polynomial(m) == brute_force_rook_counts(m)


@settings(max_examples=60, deadline=None)
@given(binary_matrices(max_rows=5, max_cols=5))
def test_deletion_step_any_pivot(m):
    want = rook_polynomial(m)
    for i, j in m.ones():
        assert deletion_step(m, i, j) == want


@settings(max_examples=40, deadline=None)
@given(binary_matrices(max_rows=3, max_cols=3), binary_matrices(max_rows=3, max_cols=3))
def test_block_diagonal_multiplies(a, b):
    assert rook_polynomial(block_diagonal(a, b)) == poly_product(rook_polynomial(a), rook_polynomial(b))


def test_permanent_via_rook_examples():
    assert permanent_via_rook(identity(3), 3) == 2
    assert permanent_via_rook(cycle_plus_identity(5), 5) == 13
    assert permanent_via_rook(BinaryMatrix.zeros(3, 3), 3) == 6
    with pytest.raises(ValueError):
        permanent_via_rook(BinaryMatrix.zeros(2, 3), 2)
    with pytest.raises(ValueError):
        permanent_via_rook(identity(3), 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(square_matrices))
def test_permanent_via_rook_matches_definition(m):
    assert permanent_via_rook(m, m.rows) == permanent_brute(complement_in_J(m))


def test_deletion_step_on_fixed_seat_minor():
    m = minor(cycle_plus_identity(8), 1, 4)
    want = rook_polynomial(m)
    for i, j in m.ones():
        assert deletion_step(m, i, j) == want
    assert zero_entry(m, 7, 1).ones_count == m.ones_count - 1
