"""Independent ground truth for chromatic symmetric functions.

``power_csf`` uses the subset expansion over spanning subgraphs,
``X_G = sum_{S subset E} (-1)^|S| p_lambda(S)``, where ``lambda(S)`` lists the
component orders of ``(V, S)``.  It shares no code with the star-expansion
engine beyond the ``SymFunc`` container.
"""

from __future__ import annotations

from itertools import combinations

from .partition import Partition
from .symfunc import SymFunc


def _graph(g) -> tuple[int, list[tuple[int, int]]]:
    if hasattr(g, "n") and hasattr(g, "edges"):
        return g.n, sorted(g.edges)
    n, edges = g
    return n, [tuple(e) for e in edges]


def _component_orders(n: int, edges) -> Partition:
    parent = list(range(n + 1))
    size = [1] * (n + 1)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
    return Partition(size[v] for v in range(1, n + 1) if find(v) == v)


def power_csf(g) -> SymFunc:
    """Power-sum expansion of ``X_g`` by summing over all edge subsets.

    ``g`` is a :class:`~starcsf.forest.Forest` or any ``(n, edges)`` pair on
    vertices ``1..n``; cycles are allowed here.
    """
    n, edges = _graph(g)
    acc: dict[Partition, int] = {}
    for k in range(len(edges) + 1):
        sign = -1 if k % 2 else 1
        for subset in combinations(edges, k):
            lam = _component_orders(n, subset)
            acc[lam] = acc.get(lam, 0) + sign
    return SymFunc("power", n, acc)


def chromatic_count(g, k: int) -> int:
    """Proper colorings of a forest with ``k`` colors, by dynamic programming."""
    if k < 1:
        raise ValueError("k must be positive")
    n, edges = _graph(g)
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * (n + 1)
    total = 1
    for root in range(1, n + 1):
        if seen[root]:
            continue
        order, parent = [root], {root: 0}
        seen[root] = True
        for x in order:
            for y in adj[x]:
                if y == parent[x]:
                    continue
                if seen[y]:
                    raise ValueError("chromatic_count expects a forest")
                seen[y] = True
                parent[y] = x
                order.append(y)
        # ways[v][c]: colorings of v's subtree with v colored c
        ways: dict[int, list[int]] = {}
        for x in reversed(order):
            row = [1] * k
            for y in adj[x]:
                if y == parent[x]:
                    continue
                child = ways.pop(y)
                s = sum(child)
                row = [row[c] * (s - child[c]) for c in range(k)]
            ways[x] = row
        total *= sum(ways[root])
    return total


def brute_force_chromatic_count(g, k: int) -> int:
    """Count proper colorings by enumerating all ``k^n`` assignments."""
    from itertools import product

    n, edges = _graph(g)
    return sum(
        1
        for colors in product(range(k), repeat=n)
        if all(colors[u - 1] != colors[v - 1] for u, v in edges)
    )
