"""
A guest who chooses his chair first
===================================

Man 1 sits in chair r (3 <= r <= n, i.e. at distance r - 1 from his wife).
The remaining men can then be seated in per((J_n - I - P)[1|r]) ways.  The
closed formula comes from splitting the forbidden board into two staircases.
"""

from menage import (
    disjunct_components,
    fixed_seat_count,
    fixed_seat_rook_polynomial,
    submatrix_A,
    submatrix_B,
    touchard_u,
)
from menage.menage import fixed_seat_permanent, straight_table_count

n, r = 10, 5
print("board A:\n", submatrix_A(n, r), sep="")
print("pieces:", [c.ones_count for c in disjunct_components(submatrix_A(n, r))])
print("\nboard B:\n", submatrix_B(n, r), sep="")
print("pieces:", [c.ones_count for c in disjunct_components(submatrix_B(n, r))])
print("\nrook polynomial of the forbidden board:", fixed_seat_rook_polynomial(n, r))

print(f"\nn = {n}")
for chair in range(3, n + 1):
    print(f"  chair {chair:>2}: formula {fixed_seat_count(n, chair):>6}  permanent {fixed_seat_permanent(n, chair):>6}")
print("  total over chairs:", sum(fixed_seat_count(n, c) for c in range(3, n + 1)), "= U_10 =", touchard_u(n))

# At a straight table the last man may take chair 1.
print("\nstraight table, n = 6:", [straight_table_count(6, c) for c in range(3, 7)])
