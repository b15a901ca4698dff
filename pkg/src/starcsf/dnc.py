"""Star expansion of forests by deletion/near-contraction.

For an edge ``e`` of a forest ``F``::

    X_F = X_{F - e} - X_{dot(F, e)} + X_{leaf(F, e)}

where ``dot`` contracts ``e`` and adds an isolated vertex and ``leaf``
contracts ``e`` and hangs a new leaf on the merged vertex.  Applying this to
internal edges only, every branch ends at a star forest ``St_lambda`` whose
CSF is the basis element ``st_lambda``.

The default engine memoizes per tree component, keyed by canonical form,
and uses multiplicativity over components.  Passing an explicit edge
selector switches to the plain recursion on whole forests, which is what
the edge-order and trace checks exercise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .forest import Edge, Forest, component_canonical_forms, from_canonical_form
from .partition import Partition
from .symfunc import SymFunc

Terms = dict[tuple, int]
Selector = Callable[[Forest], Edge]

_MEMO: dict[bytes, Terms] = {}


def clear_cache() -> None:
    _MEMO.clear()


def cache_size() -> int:
    return len(_MEMO)


def canonical_edge(f: Forest) -> Optional[Edge]:
    """The internal edge whose canonical labels ``(min, max)`` are smallest."""
    internal = f.internal_edges()
    if not internal:
        return None
    perm = f.canonical_labeling()

    def key(e):
        a, b = perm[e[0]], perm[e[1]]
        return (a, b) if a < b else (b, a)

    return min(internal, key=key)


def _mul(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    for x, c in a.items():
        for y, d in b.items():
            k = tuple(sorted(x + y, reverse=True))
            out[k] = out.get(k, 0) + c * d
    return out


def _combine(deleted: Terms, dotted: Terms, leafed: Terms) -> Terms:
    out = dict(deleted)
    for k, c in dotted.items():
        out[k] = out.get(k, 0) - c
    for k, c in leafed.items():
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def _with_one(t: Terms) -> Terms:
    return {k + (1,): c for k, c in t.items()}


def _tree_terms(code: bytes) -> Terms:
    hit = _MEMO.get(code)
    if hit is not None:
        return hit
    t = from_canonical_form(code)
    internal = t.internal_edges()
    if not internal:
        result = {(t.n,): 1}
    else:
        # t is canonically labeled, so the smallest edge is the canonical choice.
        e = min(internal)
        contracted, merged, _ = t.contract(e)
        base = Forest(t.n - 1, contracted)
        grown = Forest(t.n, contracted + [(merged, t.n)])
        result = _combine(
            _forest_terms(t.delete_edge(e)),
            _with_one(_tree_terms(base.canonical_form())),
            _tree_terms(grown.canonical_form()),
        )
    _MEMO[code] = result
    return result


def _forest_terms(f: Forest) -> Terms:
    out: Terms = {(): 1}
    for code in component_canonical_forms(f):
        out = _mul(out, _tree_terms(code))
    return out


def _plain_terms(f: Forest, select: Selector) -> Terms:
    if f.is_star_forest():
        return {tuple(f.leaf_component_partition()): 1}
    e = select(f)
    if not f.is_internal_edge(e):
        raise ValueError(f"selector returned non-internal edge {e}")
    return _combine(
        _plain_terms(f.delete_edge(e), select),
        _plain_terms(f.dot_contract(e), select),
        _plain_terms(f.leaf_contract(e)[0], select),
    )


def _to_symfunc(n: int, terms: Terms) -> SymFunc:
    return SymFunc("star", n, {Partition(k): c for k, c in terms.items()})


def star_expand(f: Forest, select: Optional[Selector] = None) -> SymFunc:
    """The star-basis expansion of ``X_f``.

    With ``select=None`` the memoized engine is used.  Otherwise ``select``
    is called on every non-star forest in the recursion and must return one
    of its internal edges; no caching is done.
    """
    if not isinstance(f, Forest):
        raise TypeError("star_expand takes a Forest")
    if select is None:
        terms = _forest_terms(f)
    else:
        terms = _plain_terms(f, select)
    out = _to_symfunc(f.n, terms)
    assert out.is_integral()
    return out


def hook_coefficient_predicted(t: Forest, m: int) -> int:
    """``(-1)^m C(#I(t), m)``, the predicted coefficient of ``st_(n-m, 1^m)``."""
    if not t.is_tree():
        raise ValueError("hook coefficients are stated for trees")
    if not 0 <= m <= t.n - 1:
        raise ValueError(f"m must lie in 0..{t.n - 1}")
    return (-1) ** m * comb(len(t.internal_edges()), m)


# -- traced expansion -----------------------------------------------------------

OPS = {"delete": +1, "dot": -1, "leafcontract": +1}
_DOT_LABEL = {"delete": "∖e", "dot": "⊙e∖ℓ", "leafcontract": "⊙e"}


@dataclass(frozen=True)
class TraceNode:
    forest: Forest
    canonical: bytes
    edge: Optional[Edge] = None  # edge the relation was applied to; None at leaves


@dataclass(frozen=True)
class TraceEdge:
    parent: int
    child: int
    op: str
    sign: int
    edge: Edge
    relabel: dict = field(default_factory=dict, compare=False)


@dataclass
class DncTrace:
    """The full ternary recursion tree; node 0 is the root."""

    nodes: list[TraceNode] = field(default_factory=list)
    edges: list[TraceEdge] = field(default_factory=list)

    @property
    def root(self) -> Forest:
        return self.nodes[0].forest

    def children(self, i: int) -> list[TraceEdge]:
        return [e for e in self.edges if e.parent == i]

    def leaves(self) -> list[int]:
        parents = {e.parent for e in self.edges}
        return [i for i in range(len(self.nodes)) if i not in parents]

    def leaf_paths(self) -> list[tuple[Partition, int, int]]:
        """``(shape, dot-contraction count, sign product)`` for every root-to-leaf path."""
        up = {e.child: e for e in self.edges}
        out = []
        for leaf in self.leaves():
            dots, sign, i = 0, 1, leaf
            while i in up:
                e = up[i]
                dots += e.op == "dot"
                sign *= e.sign
                i = e.parent
            out.append((self.nodes[leaf].forest.leaf_component_partition(), dots, sign))
        return out

    def path_statistics(self) -> dict[Partition, tuple[int, set[int]]]:
        """Per shape: number of leaf paths and the set of dot-contraction counts seen."""
        stats: dict[Partition, tuple[int, set[int]]] = {}
        for lam, dots, _ in self.leaf_paths():
            count, seen = stats.get(lam, (0, set()))
            seen.add(dots)
            stats[lam] = (count + 1, seen)
        return stats

    def coefficients_from_paths(self) -> SymFunc:
        """Sum of path signs per shape; equals the star expansion."""
        acc: dict[Partition, int] = {}
        for lam, _, sign in self.leaf_paths():
            acc[lam] = acc.get(lam, 0) + sign
        return SymFunc("star", self.root.n, acc)

    def to_dot(self) -> str:
        lines = ["digraph dnc {", "  node [shape=box];"]
        for i, node in enumerate(self.nodes):
            shape = node.forest.leaf_component_partition() if node.edge is None else None
            orders = sorted((len(c) for c in node.forest.components()), reverse=True)
            label = "{" + ",".join(map(str, orders)) + "}"
            if shape is not None:
                label += f"\\nst{shape!r}"
            else:
                label += f"\\ne={node.edge[0]}-{node.edge[1]}"
            lines.append(f'  n{i} [label="{label}"];')
        for e in self.edges:
            sign = "+" if e.sign > 0 else "-"
            lines.append(f'  n{e.parent} -> n{e.child} [label="{sign} {_DOT_LABEL[e.op]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def star_expand_traced(f: Forest, select: Optional[Selector] = None) -> tuple[SymFunc, DncTrace]:
    """Expand without memoization, recording every node of the recursion."""
    select = select or canonical_edge
    trace = DncTrace()

    def visit(g: Forest) -> tuple[int, Terms]:
        idx = len(trace.nodes)
        if g.is_star_forest():
            trace.nodes.append(TraceNode(g, g.canonical_form()))
            return idx, {tuple(g.leaf_component_partition()): 1}
        e = select(g)
        trace.nodes.append(TraceNode(g, g.canonical_form(), e))
        _, _, relabel = g.contract(e)
        results = []
        for op, child in (
            ("delete", g.delete_edge(e)),
            ("dot", g.dot_contract(e)),
            ("leafcontract", g.leaf_contract(e)[0]),
        ):
            j, terms = visit(child)
            trace.edges.append(
                TraceEdge(idx, j, op, OPS[op], e, {} if op == "delete" else relabel)
            )
            results.append(terms)
        return idx, _combine(*results)

    _, terms = visit(f)
    return _to_symfunc(f.n, terms), trace
