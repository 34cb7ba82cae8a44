"""
Continued fractions and Pell equations
======================================
"""

from congruent import cf_expand, fundamental, negative_pell_necessary, solutions
from congruent.errors import Unsolvable

for d in (2, 13, 34, 61):
    cf = cf_expand(d)
    print(f"sqrt({d}) = {cf}", "odd" if cf.odd_period else "even")

print(fundamental(61))
print([(s.x, s.y) for s in solutions(2, 1, 5)])

# 34 passes the prime test yet x^2 - 34 y^2 = -1 has no solution
print(negative_pell_necessary(34))
try:
    fundamental(34, -1)
except Unsolvable as exc:
    print("unsolvable:", exc)
