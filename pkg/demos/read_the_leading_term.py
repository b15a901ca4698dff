"""
What the expansion says about the tree
======================================

The lex-least term of a tree's star expansion is indexed by its leaf
components.  Terms with one fewer part and no 1s record which leaf
components are joined by an internal edge.
"""

from starcsf import analysis, star_expand
from starcsf.forest import attach_stars

# Hub St_4 with stars of orders 5, 3, 3 and 2 hanging off its center.
t = attach_stars([(4, [5, 3, 3, 2])])
x = star_expand(t)
print(t.n, "vertices,", len(x), "terms")

lead, c = analysis.leading_partition(x)
print("leading", lead, "coefficient", c)
print("predicted from the tree:", analysis.predicted_leading(t))

for pair in analysis.adjacency_multisets(x):
    print("mu =", pair.mu, "c =", pair.coeff, "E =", pair.E)

# N(p) > m_p picks out the hub.
print(analysis.n_values(x))
print("internal component orders:", analysis.internal_component_orders(x))

#############################################################################
# A deep vertex shows up as a part 1 and flips the sign of the lead.

from starcsf import Forest

spider = Forest(7, [(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7)])
print(analysis.analyze(star_expand(spider)).to_json_obj())
