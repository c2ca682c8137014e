"""Exact counts for the menage problem when one guest picks his chair first."""

from .matrix import (
    EMPTY,
    BinaryMatrix,
    MatrixParseError,
    all_ones,
    block_diagonal,
    canonical_staircase,
    complement_in_J,
    cycle_plus_identity,
    disjunct_components,
    format_matrix_text,
    identity,
    menage_matrix,
    minor,
    parse_matrix_text,
    read_matrix,
    write_matrix,
    zero_entry,
)
from .menage import (
    FixedSeatRecord,
    MenageRecord,
    cayley_h,
    fixed_seat_count,
    fixed_seat_record,
    fixed_seat_rook_polynomial,
    lemma6_lhs,
    menage_record,
    menage_total,
    straight_table_count,
    submatrix_A,
    submatrix_B,
    touchard_u,
    u_via_permanent,
)
from .permanent import permanent_brute, permanent_ryser
from .problem3 import Problem3Report, analyze, scan
from .rook import (
    RookPolynomial,
    brute_force_rook_counts,
    permanent_via_rook,
    poly_product,
    rook_polynomial,
    staircase_rook_polynomial,
)

__version__ = "0.1.0"
