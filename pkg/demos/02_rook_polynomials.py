"""
Rook polynomials and staircases
===============================

The k-th coefficient of a rook polynomial counts placements of k rooks on
the 1-cells of a board with no two in a line.  Boards made of pieces that
share no row or column multiply, and every zig-zag "staircase" with k cells
has the same polynomial.
"""

from menage import (
    BinaryMatrix,
    block_diagonal,
    brute_force_rook_counts,
    canonical_staircase,
    rook_polynomial,
    staircase_rook_polynomial,
)

stair = canonical_staircase(6)
print(stair, "\n")
print("deletion recursion :", rook_polynomial(stair))
print("closed form        :", staircase_rook_polynomial(6))
print("exhaustive count   :", brute_force_rook_counts(stair))

# A staircase drawn the other way round has the same polynomial.
flipped = stair.transpose()
print("\ntransposed:\n", flipped, sep="")
print(rook_polynomial(flipped))

# Two disjoint pieces: the polynomial factors.
corner = BinaryMatrix.from_rows([[1, 1], [1, 0]])
two = block_diagonal(canonical_staircase(3), corner)
print("\nblock board:\n", two, sep="")
print(rook_polynomial(two), "=", staircase_rook_polynomial(3), "*", rook_polynomial(corner))
