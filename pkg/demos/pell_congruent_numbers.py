"""
Congruent numbers out of Pell solutions
=======================================

The triangle (x^2 - 1, 2x, x^2 + 1) turns a Pell solution into a congruent
number, and every certificate checks itself.
"""

from congruent import closing_example, corollary9_build, theorem8, theorem10, verify_certificate
from congruent.pipeline import theorem8_sweep

r = theorem8(10)
print(r.n, r.certificate)

r = theorem10(5)
print(r.n, r.certificate, "bonus:", r.bonus)

# the odd primes of d always survive into n
print(corollary9_build([5, 13, 17]).n)

for y in (2, 12, 70, 408):
    r = closing_example(y)
    print(y, r.d, r.n, bool(verify_certificate(r.certificate)))

outs = theorem8_sweep(500)
print(sum(o.result is not None for o in outs), "of", len(outs), "admissible d solved")
