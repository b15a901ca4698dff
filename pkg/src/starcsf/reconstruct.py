"""Rebuild a tree from its star expansion.

Covers stars, bi-stars and extended bi-stars, diameter 4 and diameter 5,
plus trees whose leading partition has distinct parts and no 1s.  Every
tree returned by :func:`reconstruct` is certified by re-expanding it and
comparing with the input exactly.

Diameter-5 trees are found by candidate-and-verify: the two hub orders come
from the internal-subgraph evidence, the remaining leaf components are split
between the two hubs in every way that reproduces the adjacency multisets,
and each candidate is re-expanded.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from . import analysis
from .dnc import star_expand
from .forest import Forest, attach_stars, bistar, star
from .partition import Partition, multiplicity, multiset_difference
from .symfunc import SymFunc


class ReconstructionError(ValueError):
    pass


class NoCandidate(ReconstructionError):
    """No tree of the hypothesized class has the given expansion."""


class NotATreeCSF(ReconstructionError):
    """The input fails a basic necessary condition for a tree CSF."""


@dataclass(frozen=True)
class ReconstructionResult:
    tree: Forest
    diameter_class: str
    verified: bool

    def to_json_obj(self) -> dict:
        return {"diameter_class": self.diameter_class, "n": self.tree.n, "verified": self.verified}


def verify(f: SymFunc, tree: Forest) -> bool:
    return tree.n == f.degree and star_expand(tree) == f


def check_tree_csf(f: SymFunc) -> None:
    if f.basis != "star":
        raise NotATreeCSF("input must be in the star basis")
    if f.degree < 1:
        raise NotATreeCSF("degree must be positive")
    if not f.is_integral():
        raise NotATreeCSF("tree CSFs have integral star coefficients")
    if f.coefficient((f.degree,)) != 1:
        raise NotATreeCSF(f"coefficient of st({f.degree}) is {f.coefficient((f.degree,))}, not 1")


def _big_parts(lead: Partition) -> list[int]:
    return [p for p in lead if p > 1]


def _first_verified(f: SymFunc, candidates: Iterator[Forest], what: str) -> Forest:
    lead, c = analysis.leading_partition(f)
    seen = set()
    for tree in candidates:
        code = tree.canonical_form()
        if code in seen:
            continue
        seen.add(code)
        # Cheap necessary conditions before the full re-expansion.
        if analysis.predicted_leading(tree) != (lead, c):
            continue
        if verify(f, tree):
            return tree
    raise NoCandidate(f"no {what} candidate reproduces the expansion")


# -- branches ---------------------------------------------------------------------


def reconstruct_star(f: SymFunc) -> Forest:
    lead, _ = analysis.leading_partition(f)
    if lead != Partition((f.degree,)):
        raise NoCandidate(f"leading partition {lead!r} is not a single part")
    return star(f.degree)


def reconstruct_bistar(f: SymFunc) -> Forest:
    """Bi-star or extended bi-star read from a leading partition ``(i, j, 1^k)``."""
    lead, _ = analysis.leading_partition(f)
    big = _big_parts(lead)
    if len(big) != 2:
        raise NoCandidate(f"leading partition {lead!r} is not of the form (i, j, 1^k) with i, j > 1")
    i, j = big
    return bistar(i, j, multiplicity(lead, 1))


def _diam4_candidates(f: SymFunc) -> Iterator[Forest]:
    lead, _ = analysis.leading_partition(f)
    big = _big_parts(lead)
    m1 = multiplicity(lead, 1)
    if len(big) < 3 or m1 > 1:
        return
    if m1 == 1:
        yield attach_stars([(1, big)])
        return
    for hub in analysis.internal_component_orders(f):
        yield attach_stars([(hub, list(multiset_difference(lead, [hub])))])


def reconstruct_diam4(f: SymFunc) -> Forest:
    """One hub component with every other leaf component attached to its center."""
    return _first_verified(f, _diam4_candidates(f), "diameter-4")


def _sub_multisets(parts: list[int]) -> Iterator[Partition]:
    counts = sorted(Counter(parts).items(), reverse=True)
    subs = [
        Partition(p for (p, _), k in zip(counts, ks) for _ in range(k))
        for ks in product(*(range(m + 1) for _, m in counts))
    ]
    yield from sorted(subs, key=lambda s: tuple(s))


def _diam5_hubs(f: SymFunc) -> Iterator[tuple[int, int, list[int], Counter | None]]:
    """Yield ``(p1, p2, remaining parts, required side-1 neighbours or None)``."""
    lead, _ = analysis.leading_partition(f)
    big = _big_parts(lead)
    m1 = multiplicity(lead, 1)
    if m1 == 2:
        yield 1, 1, big, None
    elif m1 == 1:
        # Adjacencies to the deep vertex give the orders of all its neighbours:
        # the other hub plus every component on the deep vertex's side.
        around = Counter()
        for pair in analysis.adjacency_multisets(f):
            rest = multiset_difference(pair.E, [1])
            if len(pair.E) == 2 and 1 in pair.E and pair.coeff > 0:
                around[rest[0]] += pair.coeff
        for p2 in sorted(around):
            side = around.copy()
            side[p2] -= 1
            yield 1, p2, list(multiset_difference(big, [p2])), +side
    elif m1 == 0:
        hubs = [p for p in analysis.internal_component_orders(f)]
        if len(hubs) == 1:
            yield hubs[0], hubs[0], list(multiset_difference(lead, hubs * 2)), None
        elif len(hubs) == 2:
            yield hubs[0], hubs[1], list(multiset_difference(lead, hubs)), None


def _diam5_candidates(f: SymFunc) -> Iterator[Forest]:
    lead, _ = analysis.leading_partition(f)
    if len(_big_parts(lead)) < 3 or multiplicity(lead, 1) > 2:
        return
    extracted = analysis.extracted_adjacencies(f) if multiplicity(lead, 1) == 0 else None
    for p1, p2, remaining, side1 in _diam5_hubs(f):
        for a in _sub_multisets(remaining):
            b = list(multiset_difference(remaining, a))
            if not a or not b:
                continue
            if side1 is not None and Counter(a) != side1:
                continue
            if extracted is not None:
                pairs = Counter({(max(p1, p2), min(p1, p2)): 1})
                pairs.update((max(p1, x), min(p1, x)) for x in a)
                pairs.update((max(p2, x), min(p2, x)) for x in b)
                if pairs != extracted:
                    continue
            yield attach_stars([(p1, list(a)), (p2, b)], [(0, 1)])


def reconstruct_diam5(f: SymFunc) -> Forest:
    """Two adjacent hub components, each with its own attached leaf components."""
    return _first_verified(f, _diam5_candidates(f), "diameter-5")


def reconstruct_distinct_parts(f: SymFunc) -> Forest:
    """Assemble the tree from the leading partition and adjacency multisets alone.

    Requires a leading partition with distinct parts and no 1s, so each
    adjacency multiset ``{p, q}`` names a unique pair of leaf components.
    The result is not verified here.
    """
    lead, _ = analysis.leading_partition(f)
    if 1 in lead or len(set(lead)) != len(lead):
        raise NoCandidate(f"leading partition {lead!r} has repeated parts or 1s")
    index = {p: i for i, p in enumerate(lead)}
    parent = list(range(len(lead)))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    joins = []
    for pair in analysis.adjacency_multisets(f):
        if len(pair.E) != 2 or pair.coeff != 1:
            raise NoCandidate(f"adjacency {pair.E!r} with coefficient {pair.coeff} cannot join distinct parts")
        a, b = index[pair.E[0]], index[pair.E[1]]
        ra, rb = find(a), find(b)
        if ra == rb:
            raise NoCandidate(f"adjacency {pair.E!r} closes a cycle")
        parent[ra] = rb
        joins.append((a, b))
    if len(joins) != len(lead) - 1:
        raise NoCandidate("adjacencies do not connect all leaf components")
    return attach_stars([(p, []) for p in lead], joins)


def split_product_leading(f: SymFunc, n2: int) -> Partition:
    """Lex-least ``alpha`` with a nonzero coefficient at ``sort(n2, alpha)``.

    For ``f = X_{T1} X_{T2}`` with ``|T2| = n2`` and ``lead(T1) <= lead(T2)``
    this is the leading partition of ``X_{T1}``.
    """
    alphas = [multiset_difference(lam, [n2]) for lam in f.terms if n2 in lam]
    if not alphas:
        raise ValueError(f"no term with a part equal to {n2}")
    return min(alphas)


BRANCHES: list[tuple[str, Callable[[SymFunc], Forest]]] = [
    ("star", reconstruct_star),
    ("bistar", reconstruct_bistar),
    ("diam4", reconstruct_diam4),
    ("diam5", reconstruct_diam5),
    ("distinct_parts", reconstruct_distinct_parts),
]


def reconstruct(f: SymFunc) -> ReconstructionResult:
    """Find a tree whose star expansion is ``f``, trying each class in turn."""
    check_tree_csf(f)
    for name, branch in BRANCHES:
        try:
            tree = branch(f)
        except NoCandidate:
            continue
        if not verify(f, tree):
            continue
        if name == "bistar" and 1 in analysis.leading_partition(f)[0]:
            name = "extended_bistar"
        return ReconstructionResult(tree, name, True)
    raise NoCandidate("no tree of diameter <= 5 (or with distinct leading parts) matches")
