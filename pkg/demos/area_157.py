"""
A triangle of area 157
======================

A famous case: 157 is congruent, but the smallest witnesses are huge.
"""

from fractions import Fraction

from congruent import CongruentCertificate, corollary4, squarefree_decomposition, verify_certificate
from congruent.arith import rational_sqrt

# one generator pair puts 157 in front of a big square
v = corollary4((653821282242, 127050186481))
print(squarefree_decomposition(v.B))

a = Fraction(6803298487826435051217540, 411340519227716149383203)
b = Fraction(411340519227716149383203, 21666555693714761309610)
c = Fraction(224403517704336969924557513090674863160948472041,
             8912332268928859588025535178967163570016480830)
cert = CongruentCertificate(157, a, b, c)
print(verify_certificate(cert))

# (c/2)^2 - 157, (c/2)^2, (c/2)^2 + 157 are three rational squares
mid = (c / 2) ** 2
print(rational_sqrt(mid - 157), rational_sqrt(mid + 157), sep="\n")
