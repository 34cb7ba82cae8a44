"""
Congruent numbers from one right triangle
=========================================

A single primitive triangle already yields a handful of congruent numbers.
"""

from congruent import PythTriple, area_congruent, corollary2_numbers, lemma1_transforms
from congruent.triples import from_parameters

tr = from_parameters((2, 1))
print(tr, "area", area_congruent(tr).value)

# three bigger triangles built from the legs and hypotenuse
for lt in lemma1_transforms(tr):
    print(f"{lt.label:9} {lt.triple}")

# each number below is congruent; square factors do not matter
for v in corollary2_numbers(tr):
    print(f"{v.label:6} {v.value:>4} -> {v.squarefree}")

# scaling the triangle by k multiplies every number by k^2
big = corollary2_numbers(PythTriple(3, 4, 5).scaled(7))
print([v.value for v in big], [v.squarefree for v in big])
