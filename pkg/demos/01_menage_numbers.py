"""
Menage numbers three ways
=========================

U_n counts the ways to seat n husbands at a round table once their wives
hold every other chair, with no man next to his wife.  We compute it from
Touchard's closed form, from Cayley's recursion and as the permanent of
the (0,1) matrix of allowed chairs.
"""

from menage import cayley_h, menage_matrix, menage_total, permanent_ryser, touchard_u

# The allowed-chair matrix for five couples: man i avoids chairs i and i+1.
print(menage_matrix(5))
print()

print(f"{'n':>3} {'Touchard':>10} {'Cayley':>10} {'permanent':>10} {'M_n':>22}")
for n in range(3, 13):
    u = touchard_u(n)
    print(f"{n:>3} {u:>10} {cayley_h(n):>10} {permanent_ryser(menage_matrix(n)):>10} {menage_total(n):>22}")

# The formulas keep going long after the permanent becomes expensive.
print()
print("U_60 =", touchard_u(60))
assert touchard_u(60) == cayley_h(60)
