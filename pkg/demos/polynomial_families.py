"""
Polynomial families and where they go wrong
===========================================

Each family plugs a difference-of-squares split of an integer class into a
triangle. The printed polynomial is compared with what the triangle gives.
"""

from congruent import sweep_families, theorem6

for e in theorem6("B", 3):
    print(e.name, e.printed_value, e.derived_value, e.status)

report = sweep_families(200)
print({str(k): v for k, v in report.tallies.items()})
print(sorted(report.discrepancy_names()))

# E3 only agrees when 2k - 1 is an odd square
print([e.k for e in report.entries if e.name == "E3" and e.status != "discrepancy"])
