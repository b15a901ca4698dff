"""
Checking properties over all small trees
========================================

Run the property suites over every tree up to a given size, then look for
two different trees with the same expansion.
"""

from starcsf.harness import SUITES, conjecture_census, run_suite

for name in SUITES:
    r = run_suite(name, 8, seed=1, random_trees=20 if name == "edge-order" else 0)
    print(f"{name:12s} {r.trees_checked:4d} trees  {'ok' if r.passed else r.failures[:1]}")

census = conjecture_census(10)
print(census.trees, "trees,", len(census.collisions), "collisions")
print(census.per_n)
