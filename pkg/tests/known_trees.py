"""Trees with known star expansions, shared by the tests."""

from starcsf.forest import Forest, attach_stars, bistar

# 7 vertices, leaf components St_4, St_2, St_1.
EX_DNC = Forest(7, [(1, 2), (2, 3), (2, 4), (2, 5), (5, 6), (6, 7)])
EX_DNC_X = "-st(4,2,1) + st(4,3) + st(5,1,1) + st(5,2) - 2 st(6,1) + st(7)"

# Three legs of length 2 around the deep vertex 3.
SPIDER = Forest(7, [(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7)])
SPIDER_X = (
    "-2 st(2,2,2,1) + 3 st(3,2,1,1) + 3 st(3,2,2) - st(4,1,1,1) - 6 st(4,2,1)"
    " + 3 st(5,1,1) + 3 st(5,2) - 3 st(6,1) + st(7)"
)

# Leading partition (3,3,2,2): St_3 hub with St_3, St_2, St_2 attached.
TEN = attach_stars([(3, [3, 2, 2])])
TEN_X = (
    "st(3,3,2,2) - 2 st(4,3,2,1) - st(5,2,2,1) + st(5,3,1,1) + 2 st(5,3,2)"
    " + 2 st(6,2,1,1) + st(6,2,2) - 2 st(6,3,1) - st(7,1,1,1) - 4 st(7,2,1)"
    " + st(7,3) + 3 st(8,1,1) + 2 st(8,2) - 3 st(9,1) + st(10)"
)

# Diameter 4: St_4 hub with St_5, St_3, St_3, St_2 attached.
SEVENTEEN = attach_stars([(4, [5, 3, 3, 2])])
SEVENTEEN_X = (
    "st(5,4,3,3,2) - st(5,5,3,3,1) - 2 st(6,5,3,2,1) + st(6,5,3,3)"
    " + 2 st(7,5,3,1,1) + 2 st(7,5,3,2) - st(8,3,3,2,1) + st(8,5,2,1,1)"
    " - 4 st(8,5,3,1) + st(9,3,3,1,1) + st(9,3,3,2) - st(9,5,1,1,1)"
    " - 2 st(9,5,2,1) + 2 st(9,5,3) + 2 st(10,3,2,1,1) - 2 st(10,3,3,1)"
    " + 3 st(10,5,1,1) + st(10,5,2) - 2 st(11,3,1,1,1) - 4 st(11,3,2,1)"
    " + st(11,3,3) - 3 st(11,5,1) - st(12,2,1,1,1) + 6 st(12,3,1,1)"
    " + 2 st(12,3,2) + st(12,5) + st(13,1,1,1,1) + 3 st(13,2,1,1)"
    " - 6 st(13,3,1) - 4 st(14,1,1,1) - 3 st(14,2,1) + 2 st(14,3)"
    " + 6 st(15,1,1) + st(15,2) - 4 st(16,1) + st(17)"
)

# Distinct parts (9,7,6,5,4,3,2); components indexed in that order.
THIRTY_SIX = attach_stars(
    [(p, []) for p in (9, 7, 6, 5, 4, 3, 2)],
    [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5), (4, 6)],
)
THIRTY_SIX_TABLE = {
    (16, 6, 5, 4, 3, 2): (1, (9, 7)),
    (15, 7, 5, 4, 3, 2): (1, (9, 6)),
    (11, 9, 7, 4, 3, 2): (1, (6, 5)),
    (10, 9, 7, 5, 3, 2): (1, (6, 4)),
    (9, 7, 7, 6, 5, 2): (1, (4, 3)),
    (9, 7, 6, 6, 5, 3): (1, (4, 2)),
}

# Extended bi-star with leading partition (6,4,1^4).
EXT_BISTAR = bistar(6, 4, 4)

# Internal subgraph example: v1=3, v2=4, v3=5 with internal degrees 3, 3, 5.
_V = (
    "c0 c1 c2 c3 c4 c5 c6 b0 b2 b3 b32 b4 b5 a2 a4 a5 a52 a53 d0 d2 d22 d23 d3 d4 d5 e3 e32 e5"
).split()
_IDX = {name: i + 1 for i, name in enumerate(_V)}
_E = (
    "c1-c2 c3-b3 c3-b32 c2-c3 c3-c4 c4-c5 c5-c6 c2-b2 b2-a2 c4-b4 b4-a4 c0-c1 c1-b0"
    " c1-d0 c2-d2 c2-d22 c2-d23 c3-d3 d3-e3 d3-e32 c4-d4 c4-b5 c4-d5 d5-e5 b5-a5 b5-a52 b5-a53"
).split()
THREE_HUBS = Forest(len(_V), [tuple(_IDX[x] for x in e.split("-")) for e in _E])
THREE_HUBS_CENTERS = {"v1": _IDX["c2"], "v2": _IDX["c3"], "v3": _IDX["c4"]}
THREE_HUBS_INTERNAL = {_IDX[x] for x in "b3 b32 c2 c3 c4 d2 d22 d23 d4".split()}
