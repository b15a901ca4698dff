"""
Star expansions of small trees
==============================

Expand a few trees in the star basis, convert to power sums, and check the
result against a brute-force count of proper colorings.
"""

from starcsf import Forest, path, star_expand, to_power
from starcsf.oracle import brute_force_chromatic_count
from starcsf.symfunc import evaluate_at_ones

# The path on four vertices needs one step: its only internal edge is 2-3.
print(star_expand(path(4)).to_text())

# A 7-vertex tree with leaf components of orders 4, 2 and 1.
t = Forest(7, [(1, 2), (2, 3), (2, 4), (2, 5), (5, 6), (6, 7)])
x = star_expand(t)
print(x.to_text())
print(len(x), "terms")

# Same function in power sums.
p = to_power(x)
print(p.to_text())

# Setting k variables to 1 counts proper k-colorings.
for k in range(1, 5):
    print(k, evaluate_at_ones(p, k), brute_force_chromatic_count(t, k))

#############################################################################
# The recursion can be recorded.  Each leaf of the trace is a star forest,
# and summing path signs per shape gives back the coefficients.

from starcsf.dnc import star_expand_traced

x, trace = star_expand_traced(t)
print(len(trace.nodes), "nodes,", len(trace.leaves()), "leaves")
for lam, (count, dots) in sorted(trace.path_statistics().items()):
    print(lam, "paths:", count, "dot-contractions:", sorted(dots), "coeff:", x.coefficient(lam))
print(trace.to_dot()[:200])
