import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from menage.matrix import EMPTY, BinaryMatrix, all_ones, complement_in_J, identity, menage_matrix, minor
from menage.menage import REFERENCE_U
from menage.permanent import permanent_brute, permanent_ryser
from menage.rook import permanent_via_rook

from oracles import count_seatings
from test_rook import square_matrices


def test_small_values():
    assert permanent_ryser(all_ones(3)) == 6
    assert permanent_brute(identity(4)) == 1
    assert permanent_ryser(EMPTY) == permanent_brute(EMPTY) == 1
    # derangements of 4, counted by enumerating all 24 permutations
    assert permanent_brute(complement_in_J(identity(4))) == 9
    assert permanent_ryser(complement_in_J(identity(4))) == 9


def test_zero_line_short_circuit():
    assert permanent_ryser(BinaryMatrix.from_rows([[1, 1], [0, 0]])) == 0
    assert permanent_ryser(BinaryMatrix.from_rows([[1, 0], [1, 0]])) == 0


def test_menage_sequence():
    assert [permanent_ryser(menage_matrix(n)) for n in range(2, 13)] == list(REFERENCE_U)


def test_seating_oracle_agrees_for_small_n():
    for n in range(2, 8):
        assert permanent_ryser(menage_matrix(n)) == count_seatings(n)


def test_paper_minor_value():
    assert permanent_ryser(minor(menage_matrix(10), 1, 3)) == 54888


@pytest.mark.parametrize("n", range(3, 9))
def test_ryser_matches_brute_on_minors(n):
    for r in range(3, n + 1):
        m = minor(menage_matrix(n), 1, r)
        assert permanent_ryser(m) == permanent_brute(m)


def test_guards():
    with pytest.raises(ValueError):
        permanent_ryser(BinaryMatrix.zeros(2, 3))
    with pytest.raises(ValueError):
        permanent_ryser(all_ones(29))
    with pytest.raises(ValueError):
        permanent_brute(all_ones(9))


def test_random_sweep():
    rng = np.random.default_rng(11)
    for _ in range(150):
        n = int(rng.integers(1, 8))
        m = BinaryMatrix.from_rows((rng.random((n, n)) < 0.6).astype(int))
        assert permanent_ryser(m) == permanent_brute(m)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(square_matrices), st.randoms(use_true_random=False))
def test_invariances(m, rnd):
    p = permanent_ryser(m)
    assert p == permanent_brute(m)
    assert permanent_ryser(m.transpose()) == p
    rows = list(range(1, m.rows + 1))
    cols = list(range(1, m.cols + 1))
    rnd.shuffle(rows)
    assert permanent_ryser(m.permute(rows, cols)) == p
    rnd.shuffle(cols)
    assert permanent_ryser(m.permute(list(range(1, m.rows + 1)), cols)) == p
    assert permanent_ryser(complement_in_J(m)) == permanent_via_rook(m, m.rows)
