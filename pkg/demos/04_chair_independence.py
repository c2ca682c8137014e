"""
When does the chair not matter?
===============================

If every chair gives the same count, that count must be U_n / (n - 2).
Divisibility alone is not enough: n = 10 divides but the counts differ.
"""

from menage import analyze, scan

for rep in scan(3, 16):
    flag = "constant" if rep.is_constant else ""
    print(f"n={rep.n:>2}  n-2 | U_n: {str(rep.divides):5}  {flag}")

ten = analyze(10)
print("\nn = 10: U_n/(n-2) =", ten.quotient, " but chair 3 gives", ten.counts[3])
