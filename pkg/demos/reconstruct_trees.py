"""
Rebuilding trees from their expansions
======================================

Each reconstruction proposes a tree from the expansion and keeps it only
if re-expanding gives back the input exactly.
"""

from starcsf import is_isomorphic, reconstruct, star_expand
from starcsf.forest import attach_stars, bistar, format_edge_list

trees = {
    "bi-star": bistar(5, 3),
    "extended bi-star": bistar(6, 4, 4),
    "diameter 4": attach_stars([(3, [3, 2, 2])]),
    "diameter 5": attach_stars([(3, [2, 2]), (3, [4])], [(0, 1)]),
}
for name, t in trees.items():
    r = reconstruct(star_expand(t))
    print(f"{name:18s} -> {r.diameter_class:16s} iso={is_isomorphic(r.tree, t)}")

#############################################################################
# With distinct leading parts and no 1s, every adjacency term names one
# pair of leaf components outright, so larger diameters work too.

big = attach_stars(
    [(p, []) for p in (9, 7, 6, 5, 4, 3, 2)],
    [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5), (4, 6)],
)
x = star_expand(big)
print(big.n, "vertices, diameter", big.diameter(), ",", len(x), "terms")
r = reconstruct(x)
print(r.diameter_class, is_isomorphic(r.tree, big))
print(format_edge_list(r.tree))
