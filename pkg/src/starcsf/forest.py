"""Labeled simple forests on vertices ``1..n``.

Besides the usual graph queries this module provides the structural
vocabulary used by the star expansion (internal edges, deep vertices, leaf
components, internal subgraph), the three edge operations of the
deletion/near-contraction recursion, AHU canonical forms, and exhaustive
enumeration of unlabeled trees.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .partition import Partition

Edge = tuple[int, int]


class CycleError(ValueError):
    """Raised when an edge set is not acyclic."""


class ParseError(ValueError):
    """Malformed edge-list text; ``line`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _norm(e: Iterable[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


class Forest:
    """An immutable simple acyclic graph with vertex set ``{1, ..., n}``."""

    __slots__ = ("n", "edges", "_adj", "_code")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized: list[Edge] = []
        for e in edges:
            u, v = _norm(e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u < 1 or v > n:
                raise ValueError(f"edge {u}-{v} out of range 1..{n}")
            normalized.append((u, v))
        es = frozenset(normalized)
        if len(es) != len(normalized):
            raise ValueError("repeated edge")
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_code", None)
        if len(es) + len(self.components()) != n:
            raise CycleError("edge set contains a cycle")

    def __setattr__(self, name, value):
        raise AttributeError("Forest is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Forest) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Forest(n={self.n}, edges={sorted(self.edges)})"

    # -- basic queries ----------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each sorted, ordered by minimum."""
        seen = [False] * (self.n + 1)
        comps = []
        for s in range(1, self.n + 1):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1

    def component_forests(self) -> list["Forest"]:
        """Each component as its own forest, relabeled to ``1..k`` preserving order."""
        out = []
        for comp in self.components():
            index = {v: i + 1 for i, v in enumerate(comp)}
            es = [(index[u], index[v]) for u, v in self.edges if u in index]
            out.append(Forest(len(comp), es))
        return out

    # -- structural vocabulary --------------------------------------------

    def leaves(self) -> set[int]:
        return {v for v in range(1, self.n + 1) if len(self._adj[v]) == 1}

    def is_internal_edge(self, e: Edge) -> bool:
        u, v = e
        return len(self._adj[u]) >= 2 and len(self._adj[v]) >= 2

    def internal_edges(self) -> set[Edge]:
        return {e for e in self.edges if self.is_internal_edge(e)}

    def leaf_edges(self) -> set[Edge]:
        return {e for e in self.edges if not self.is_internal_edge(e)}

    def internal_degree(self, v: int) -> int:
        self._check_vertex(v)
        if len(self._adj[v]) < 2:
            return 0
        return sum(1 for w in self._adj[v] if len(self._adj[w]) >= 2)

    def deep_vertices(self) -> set[int]:
        """Internal vertices with no leaf neighbour."""
        return {
            v
            for v in range(1, self.n + 1)
            if len(self._adj[v]) >= 2 and all(len(self._adj[w]) >= 2 for w in self._adj[v])
        }

    def is_star_forest(self) -> bool:
        return not any(self.is_internal_edge(e) for e in self.edges)

    def leaf_components(self) -> "LeafComponentDecomposition":
        internal = self.internal_edges()
        rest = Forest(self.n, self.edges - internal)
        comps = []
        for members in rest.components():
            comps.append(LeafComponent(_star_center(self, rest, members), frozenset(members)))
        comps.sort(key=lambda c: (-c.order, c.center))
        return LeafComponentDecomposition(tuple(comps), frozenset(internal))

    def leaf_component_partition(self) -> Partition:
        return Partition(len(c) for c in Forest(self.n, self.edges - self.internal_edges()).components())

    def internal_subgraph(self) -> "Subgraph":
        """Vertices of internal degree > 1, their leaf neighbours, and induced edges."""
        hubs = {v for v in range(1, self.n + 1) if self.internal_degree(v) > 1}
        verts = set(hubs)
        for v in hubs:
            verts.update(w for w in self._adj[v] if len(self._adj[w]) == 1)
        es = frozenset(e for e in self.edges if e[0] in verts and e[1] in verts)
        return Subgraph(frozenset(verts), es)

    def internal_components(self) -> list["LeafComponent"]:
        """Leaf components whose center has internal degree > 1 (those inside the internal subgraph)."""
        return [c for c in self.leaf_components().components if self.internal_degree(c.center) > 1]

    def diameter(self) -> int:
        if self.n == 0 or not self.is_tree():
            raise ValueError("diameter is defined for trees only")
        far, _ = _bfs_far(self._adj, 1)
        _, dist = _bfs_far(self._adj, far)
        return dist

    # -- edge operations --------------------------------------------------

    def _require_edge(self, e) -> Edge:
        e = _norm(e)
        if e not in self.edges:
            raise KeyError(f"edge {e[0]}-{e[1]} not in forest")
        return e

    def delete_edge(self, e) -> "Forest":
        e = self._require_edge(e)
        return Forest(self.n, self.edges - {e})

    def contract(self, e) -> tuple[list[Edge], int, dict[int, int]]:
        """Contract ``e=uv`` (``u<v``) into ``u``, closing the gap left by ``v``.

        Returns the contracted edge list on ``1..n-1``, the label of the merged
        vertex, and the relabeling map (old label -> new label; ``v`` maps to
        the merged vertex).
        """
        u, v = self._require_edge(e)
        relabel = {}
        for x in range(1, self.n + 1):
            if x == v:
                continue
            relabel[x] = x - 1 if x > v else x
        relabel[v] = relabel[u]
        es = {_norm((relabel[a], relabel[b])) for a, b in self.edges if (a, b) != (u, v)}
        return sorted(es), relabel[u], relabel

    def leaf_contract(self, e) -> tuple["Forest", int]:
        """Contract ``e`` and hang a new leaf, labeled ``n``, on the merged vertex."""
        es, merged, _ = self.contract(e)
        return Forest(self.n, es + [(merged, self.n)]), self.n

    def dot_contract(self, e) -> "Forest":
        """Contract ``e`` and add an isolated vertex labeled ``n``."""
        es, _, _ = self.contract(e)
        return Forest(self.n, es)

    # -- canonical forms --------------------------------------------------

    def canonical_form(self) -> bytes:
        if self._code is None:
            object.__setattr__(self, "_code", _canonical(self)[0])
        return self._code

    def canonical_labeling(self) -> dict[int, int]:
        """Map each vertex to its label in the canonical relabeling."""
        code, perm = _canonical(self)
        if self._code is None:
            object.__setattr__(self, "_code", code)
        return perm

    def canonical(self) -> "Forest":
        """The canonically labeled representative of this forest's isomorphism class."""
        return from_canonical_form(self.canonical_form())

    def relabel(self, perm: dict[int, int]) -> "Forest":
        return Forest(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def disjoint_union(self, other: "Forest") -> "Forest":
        k = self.n
        return Forest(k + other.n, list(self.edges) + [(u + k, v + k) for u, v in other.edges])


@dataclass(frozen=True)
class LeafComponent:
    center: int
    members: frozenset

    @property
    def order(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class LeafComponentDecomposition:
    components: tuple[LeafComponent, ...]
    internal_edges: frozenset = field(default_factory=frozenset)

    def partition(self) -> Partition:
        return Partition(c.order for c in self.components)

    def component_of(self, v: int) -> LeafComponent:
        for c in self.components:
            if v in c.members:
                return c
        raise KeyError(v)


@dataclass(frozen=True)
class Subgraph:
    vertices: frozenset
    edges: frozenset

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        start = next(iter(self.vertices))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.vertices)


def _star_center(f: Forest, rest: Forest, members: list[int]) -> int:
    # Order >= 3: the unique vertex of degree >= 2 in the star.  Order 2: the
    # endpoint that is not a leaf of ``f`` (either one for an isolated edge).
    if len(members) >= 3:
        return max(members, key=lambda v: (rest.degree(v), -v))
    return min(members, key=lambda v: (f.degree(v) < 2, v))


def _bfs_far(adj, s: int) -> tuple[int, int]:
    dist = {s: 0}
    q = deque([s])
    far = s
    while q:
        x = q.popleft()
        if dist[x] > dist[far]:
            far = x
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return far, dist[far]


# -- AHU canonical encoding ------------------------------------------------


def _centers(adj, comp: list[int]) -> list[int]:
    if len(comp) <= 2:
        return list(comp)
    deg = {v: len(adj[v]) for v in comp}
    layer = [v for v in comp if deg[v] <= 1]
    remaining = len(comp)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _rooted(adj, root: int) -> tuple[str, list[int]]:
    """AHU code of the tree rooted at ``root`` and its canonical preorder."""
    parent = {root: 0}
    order = [root]
    for x in order:
        for y in adj[x]:
            if y != parent[x]:
                parent[y] = x
                order.append(y)
    code: dict[int, str] = {}
    kids: dict[int, list[int]] = {}
    for x in reversed(order):
        ch = sorted((y for y in adj[x] if y != parent[x]), key=lambda y: code[y])
        kids[x] = ch
        code[x] = "(" + "".join(code[y] for y in ch) + ")"
    pre = []
    stack = [root]
    while stack:
        x = stack.pop()
        pre.append(x)
        stack.extend(reversed(kids[x]))
    return code[root], pre


def _canonical(f: Forest) -> tuple[bytes, dict[int, int]]:
    adj = f._adj
    parts = []
    for comp in f.components():
        best = min(_rooted(adj, c) for c in _centers(adj, comp))
        parts.append(best)
    parts.sort(key=lambda t: t[0])
    perm: dict[int, int] = {}
    for _, pre in parts:
        for v in pre:
            perm[v] = len(perm) + 1
    return "".join(p[0] for p in parts).encode("ascii"), perm


def component_canonical_forms(f: Forest) -> list[bytes]:
    """Canonical codes of the components of ``f``, sorted."""
    adj = f._adj
    codes = [min(_rooted(adj, c)[0] for c in _centers(adj, comp)) for comp in f.components()]
    return sorted(c.encode("ascii") for c in codes)


def from_canonical_form(code: bytes | str) -> Forest:
    """Decode a canonical code into its canonically labeled forest."""
    if isinstance(code, bytes):
        code = code.decode("ascii")
    edges = []
    stack: list[int] = []
    n = 0
    for ch in code:
        if ch == "(":
            n += 1
            if stack:
                edges.append((stack[-1], n))
            stack.append(n)
        elif ch == ")":
            if not stack:
                raise ValueError("unbalanced canonical code")
            stack.pop()
        else:
            raise ValueError(f"bad character {ch!r} in canonical code")
    if stack:
        raise ValueError("unbalanced canonical code")
    return Forest(n, edges)


def canonical_form(f: Forest) -> bytes:
    return f.canonical_form()


def is_isomorphic(a: Forest, b: Forest) -> bool:
    return a.n == b.n and len(a.edges) == len(b.edges) and a.canonical_form() == b.canonical_form()


# -- constructors ----------------------------------------------------------


def star(k: int) -> Forest:
    """``St_k``: one center (vertex 1) joined to ``k-1`` leaves."""
    if k < 1:
        raise ValueError("star order must be positive")
    return Forest(k, [(1, i) for i in range(2, k + 1)])


def star_forest(orders: Iterable[int]) -> Forest:
    f = Forest(0)
    for k in Partition(orders):
        f = f.disjoint_union(star(k))
    return f


def path(k: int) -> Forest:
    return Forest(k, [(i, i + 1) for i in range(1, k)])


def bistar(i: int, j: int, deep: int = 0) -> Forest:
    """Stars ``St_i`` and ``St_j`` whose centers are joined by a path through ``deep`` degree-2 vertices."""
    if i < 2 or j < 2:
        raise ValueError("bi-star leaf stars need order >= 2")
    f = star(i).disjoint_union(Forest(deep)).disjoint_union(star(j))
    chain = [1] + [i + t for t in range(1, deep + 1)] + [i + deep + 1]
    return Forest(f.n, list(f.edges) + list(zip(chain, chain[1:])))


def attach_stars(orders_by_hub: list[tuple[int, list[int]]], hub_edges: list[tuple[int, int]] = ()) -> Forest:
    """Build a tree from leaf-component orders.

    ``orders_by_hub`` lists ``(hub_order, attached_orders)``: a star of
    ``hub_order`` whose center is joined to the centers of stars of each
    attached order.  ``hub_edges`` joins hub centers by index.
    """
    edges: list[Edge] = []
    n = 0
    hub_centers = []

    def add_star(k: int) -> int:
        nonlocal n
        center = n + 1
        for leaf in range(center + 1, center + k):
            edges.append((center, leaf))
        n += k
        return center

    for hub_order, attached in orders_by_hub:
        c = add_star(hub_order)
        hub_centers.append(c)
        for k in attached:
            edges.append((c, add_star(k)))
    for a, b in hub_edges:
        edges.append((hub_centers[a], hub_centers[b]))
    return Forest(n, edges)


# -- enumeration -----------------------------------------------------------

_TREES: dict[int, list[bytes]] = {1: [b"()"]}


def max_enumeration_n() -> int:
    return int(os.environ.get("CSF_MAX_N", "18"))


def _tree_codes(n: int) -> list[bytes]:
    if n in _TREES:
        return _TREES[n]
    codes = set()
    for code in _tree_codes(n - 1):
        t = from_canonical_form(code)
        for v in range(1, n):
            codes.add(Forest(n, list(t.edges) + [(v, n)]).canonical_form())
    _TREES[n] = sorted(codes)
    return _TREES[n]


def enumerate_trees(n: int) -> Iterator[Forest]:
    """One canonically labeled tree per isomorphism class on ``n`` vertices.

    Trees are grown by attaching a leaf to every vertex of every tree on
    ``n-1`` vertices and deduplicated by canonical form.  Output is sorted
    by canonical code.  ``CSF_MAX_N`` (default 18) caps ``n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_enumeration_n():
        raise ValueError(f"n={n} exceeds CSF_MAX_N={max_enumeration_n()}")
    for code in _tree_codes(n):
        yield from_canonical_form(code)


# -- text formats ----------------------------------------------------------


def parse_edge_list(text: str) -> Forest:
    """Parse ``u v`` lines; ``#`` comments and blank lines are ignored.

    A header line ``n=<k>`` fixes the vertex count (needed for isolated
    vertices); otherwise it is the largest label.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.replace(" ", "").startswith("n="):
            try:
                n = int(line.replace(" ", "")[2:])
            except ValueError:
                raise ParseError(f"bad header {raw.strip()!r}", lineno) from None
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected two vertex labels, got {raw.strip()!r}", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"non-integer vertex label in {raw.strip()!r}", lineno) from None
        if u < 1 or v < 1:
            raise ParseError("vertex labels are 1-based", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        edges.append((lineno, (u, v)))
    top = max((max(e) for _, e in edges), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"vertex {top} exceeds header n={n}")
    seen = {}
    for lineno, e in edges:
        key = _norm(e)
        if key in seen:
            raise ParseError(f"repeated edge {key[0]}-{key[1]} (first on line {seen[key]})", lineno)
        seen[key] = lineno
    try:
        return Forest(n, [e for _, e in edges])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_edge_list(f: Forest, header: bool = True) -> str:
    lines = [f"n={f.n}"] if header else []
    lines += [f"{u} {v}" for u, v in f.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_graph6(data: str | bytes) -> Forest:
    import networkx as nx

    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    g = nx.from_graph6_bytes(data)
    return Forest(g.number_of_nodes(), [(u + 1, v + 1) for u, v in g.edges()])


def to_graph6(f: Forest) -> str:
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(f.n))
    g.add_edges_from((u - 1, v - 1) for u, v in f.edges)
    return nx.to_graph6_bytes(g, header=False).decode("ascii").strip()
