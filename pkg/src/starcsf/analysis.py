"""Reconstruction evidence read off a star expansion, and its structural twin.

Given ``X_T = sum c_lambda st_lambda`` the functions here extract the leading
partition and coefficient, the adjacency multisets ``E_mu`` and the counts
``N(p)``.  The ``predicted_*`` / ``structural_*`` functions compute the same
quantities directly from a tree so the two routes can be compared.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb, prod

from .forest import Forest
from .partition import Partition, hook, multiplicity, multiset_difference
from .symfunc import SymFunc


@dataclass(frozen=True)
class AdjacencyPair:
    E: Partition
    coeff: int
    mu: Partition


@dataclass(frozen=True)
class AdjacencyReport:
    leading: Partition
    leading_coeff: int
    pairs: tuple[AdjacencyPair, ...]
    n_values: dict = field(default_factory=dict)
    # "no-deep" (m_1 = 0), "one-deep" (m_1 = 1) or "outside"; only the first
    # two regimes are covered by the adjacency results, only "no-deep" by the
    # membership criterion N(p) > m_p.
    regime: str = "no-deep"

    def to_json_obj(self) -> dict:
        return {
            "leading": self.leading.to_json(),
            "leading_coeff": self.leading_coeff,
            "pairs": [
                {"mu": p.mu.to_json(), "coeff": p.coeff, "E": p.E.to_json()} for p in self.pairs
            ],
            "N": {str(p): v for p, v in sorted(self.n_values.items(), reverse=True)},
            "regime": self.regime,
        }


def _star(f: SymFunc) -> SymFunc:
    if f.basis != "star":
        raise ValueError("expected a star-basis symmetric function")
    return f


def leading_partition(f: SymFunc) -> tuple[Partition, int]:
    """Lexicographically smallest partition with nonzero coefficient, and that coefficient."""
    _star(f)
    if f.is_zero():
        raise ValueError("the zero function has no leading partition")
    lam = min(f.terms)
    return lam, f.coefficient(lam)


def predicted_leading(t: Forest) -> tuple[Partition, int]:
    """Leaf-component partition and ``(-1)^m prod (deg(u) - 1)`` over deep vertices ``u``."""
    deep = t.deep_vertices()
    coeff = (-1) ** len(deep) * prod(t.degree(u) - 1 for u in deep)
    return t.leaf_component_partition(), coeff


def adjacency_multisets(f: SymFunc) -> list[AdjacencyPair]:
    """``(lambda_lead - mu, c_mu, mu)`` for every qualifying ``mu``, increasing in ``mu``.

    ``mu`` qualifies when ``c_mu != 0``, ``mu`` has one part fewer than the
    leading partition, and ``mu`` has no part equal to 1.
    """
    lead, _ = leading_partition(f)
    out = []
    for mu, c in f.items():
        if len(mu) == len(lead) - 1 and 1 not in mu:
            out.append(AdjacencyPair(multiset_difference(lead, mu), c, mu))
    return out


def n_values(f: SymFunc) -> dict[int, int]:
    lead, _ = leading_partition(f)
    pairs = adjacency_multisets(f)
    return {p: sum(multiplicity(a.E, p) * a.coeff for a in pairs) for p in sorted(set(lead))}


def n_of_p(f: SymFunc, p: int) -> int:
    """``N(p) = sum_mu m_p(E_mu) c_mu``; ``p`` must be a part of the leading partition."""
    lead, _ = leading_partition(f)
    if p not in lead:
        raise ValueError(f"{p} is not a part of the leading partition {lead!r}")
    return sum(multiplicity(a.E, p) * a.coeff for a in adjacency_multisets(f))


def internal_component_orders(f: SymFunc) -> Partition:
    """Orders of leaf components lying in the internal subgraph.

    Parts ``p > 1`` with ``N(p) > m_p`` are reported once each; every part 1
    of the leading partition is reported (order-1 components are deep
    vertices and always lie in the internal subgraph).
    """
    lead, _ = leading_partition(f)
    nv = n_values(f)
    big = [p for p in sorted(set(lead), reverse=True) if p > 1 and nv[p] > multiplicity(lead, p)]
    return Partition(big + [1] * multiplicity(lead, 1))


def regime(f: SymFunc) -> str:
    m1 = multiplicity(leading_partition(f)[0], 1)
    return {0: "no-deep", 1: "one-deep"}.get(m1, "outside")


def analyze(f: SymFunc) -> AdjacencyReport:
    lead, c = leading_partition(f)
    return AdjacencyReport(lead, c, tuple(adjacency_multisets(f)), n_values(f), regime(f))


def hook_check(f: SymFunc, t: Forest) -> bool:
    """Whether ``c_(n-m, 1^m) = (-1)^m C(#I(t), m)`` for every ``0 <= m < n``."""
    k = len(t.internal_edges())
    return all(f.coefficient(hook(t.n, m)) == (-1) ** m * comb(k, m) for m in range(t.n))


# -- structural counterparts ----------------------------------------------------


def structural_adjacencies(t: Forest) -> Counter:
    """Multiset of ``(larger, smaller)`` leaf-component orders joined by an internal edge.

    Every internal edge joins the centers of two leaf components (a deep
    vertex is the center of its own order-1 component).
    """
    dec = t.leaf_components()
    order = {}
    for comp in dec.components:
        for v in comp.members:
            order[v] = comp.order
    out: Counter = Counter()
    for u, v in dec.internal_edges:
        a, b = order[u], order[v]
        out[(max(a, b), min(a, b))] += 1
    return out


def extracted_adjacencies(f: SymFunc) -> Counter:
    """The adjacency multisets of ``f`` with multiplicities ``c_mu``, as a Counter of pairs."""
    out: Counter = Counter()
    for a in adjacency_multisets(f):
        if len(a.E) != 2:
            raise ValueError(f"adjacency multiset {a.E!r} does not have two elements")
        out[tuple(a.E)] += a.coeff
    return out


def structural_internal_orders(t: Forest) -> set[int]:
    return {c.order for c in t.internal_components()}
