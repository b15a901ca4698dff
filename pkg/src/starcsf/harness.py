"""Verification suites and the tree-isomorphism census.

Each suite checks one family of properties over every tree on ``1..max_n``
vertices; ``edge-order`` can additionally sample seeded random labeled
trees.  Reports are deterministic for a given ``(max_n, seed)``.
"""

from __future__ import annotations

import json
import logging
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import analysis
from .dnc import star_expand, star_expand_traced
from .forest import Forest, enumerate_trees, format_edge_list, is_isomorphic
from .oracle import chromatic_count, power_csf
from .reconstruct import NoCandidate, reconstruct
from .symfunc import evaluate_at_ones, from_json_obj, to_power

log = logging.getLogger(__name__)

CENSUS_VERSION = 1


@dataclass(frozen=True, order=True)
class Failure:
    tree: str
    property: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    suite: str
    n_range: tuple[int, int]
    trees_checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self, timing: bool = False) -> dict:
        obj = {
            "suite": self.suite,
            "n_range": list(self.n_range),
            "trees_checked": self.trees_checked,
            "passed": self.passed,
            "failures": [f.__dict__ for f in sorted(self.failures)],
        }
        if timing:
            obj["elapsed"] = round(self.elapsed, 3)
        return obj


def random_tree(n: int, rng: random.Random) -> Forest:
    """Uniform labeled tree on ``n`` vertices from a random Pruefer sequence."""
    if n <= 2:
        return Forest(n, [(1, 2)] if n == 2 else [])
    return from_pruefer([rng.randint(1, n) for _ in range(n - 2)], n)


def from_pruefer(seq: list[int], n: int) -> Forest:
    import heapq

    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Forest(n, edges)


def random_selector(rng: random.Random) -> Callable[[Forest], tuple[int, int]]:
    def select(f: Forest):
        return rng.choice(sorted(f.internal_edges()))

    return select


# -- per-tree checks -------------------------------------------------------------
# Each check takes (tree, rng) and yields (property, expected, actual) on failure.

Check = Callable[[Forest, random.Random], Iterator[tuple[str, object, object]]]


def check_oracle(t: Forest, rng) -> Iterator:
    x = star_expand(t)
    p = power_csf(t)
    if to_power(x) != p:
        yield "power expansion", p.to_text(), to_power(x).to_text()
    for k in (1, 2, 3, 4):
        want = chromatic_count(t, k)
        got = evaluate_at_ones(p, k)
        if got != want or want != k * (k - 1) ** (t.n - 1):
            yield f"chromatic count k={k}", want, got


def check_lead(t: Forest, rng) -> Iterator:
    got = analysis.leading_partition(star_expand(t))
    want = analysis.predicted_leading(t)
    if got != want:
        yield "leading term", want, got


def check_hooks(t: Forest, rng) -> Iterator:
    if not analysis.hook_check(star_expand(t), t):
        yield "hook coefficients", "(-1)^m C(#I, m)", star_expand(t).to_text()


def _diam45(t: Forest) -> bool:
    return t.diameter() in (4, 5)


def check_adjacency(t: Forest, rng) -> Iterator:
    deep = t.deep_vertices()
    if len(deep) > 1 or (not deep and not _diam45(t)):
        return
    x = star_expand(t)
    got = analysis.extracted_adjacencies(x)
    want = analysis.structural_adjacencies(t)
    if deep:
        want = {k: v for k, v in want.items() if 1 in k}
    if dict(got) != dict(want) or any(c <= 0 for c in got.values()):
        yield "adjacency multisets", sorted(want.items()), sorted(got.items())


def check_internal(t: Forest, rng) -> Iterator:
    sub = t.internal_subgraph()
    if not sub.is_connected():
        yield "internal subgraph connected", True, False
    d = t.diameter()
    if d in (4, 5):
        comps = t.internal_components()
        if len(comps) != d - 3:
            yield f"internal components at diameter {d}", d - 3, len(comps)
        if not t.deep_vertices():
            got = {p for p in analysis.internal_component_orders(star_expand(t)) if p > 1}
            want = analysis.structural_internal_orders(t)
            if got != want:
                yield "internal component orders", sorted(want), sorted(got)
    if d == 5 and len(t.internal_components()) == 2:
        # The edge joining the two hubs splits t into trees of diameter <= 4.
        u, v = (c.center for c in t.internal_components())
        for part in t.delete_edge((u, v)).component_forests():
            if part.diameter() > 4:
                yield "sides of the hub edge have diameter <= 4", "<= 4", part.diameter()


def check_reconstruct(t: Forest, rng) -> Iterator:
    if t.diameter() > 5:
        return
    x = star_expand(t)
    try:
        r = reconstruct(x)
    except NoCandidate as exc:
        yield "reconstruction", "a tree", str(exc)
        return
    if not (r.verified and is_isomorphic(r.tree, t)):
        yield "reconstruction round trip", format_edge_list(t), format_edge_list(r.tree)


def check_edge_order(t: Forest, rng, orders: int = 20) -> Iterator:
    x = star_expand(t)
    for _ in range(orders):
        y = star_expand(t, select=random_selector(rng))
        if y != x:
            yield "edge-order invariance", x.to_text(), y.to_text()
            break
    for e in sorted(t.edges):
        deleted = star_expand(t.delete_edge(e))
        dotted = star_expand(t.dot_contract(e))
        leafed = star_expand(t.leaf_contract(e)[0])
        if t.is_internal_edge(e):
            if deleted - dotted + leafed != x:
                yield f"DNC identity at {e}", x.to_text(), (deleted - dotted + leafed).to_text()
        elif leafed != x or deleted != dotted:
            yield f"leaf-edge neutrality at {e}", "equal", "different"


def check_trace(t: Forest, rng) -> Iterator:
    x, trace = star_expand_traced(t)
    if x != star_expand(t):
        yield "traced expansion", star_expand(t).to_text(), x.to_text()
    for lam, (count, dots) in trace.path_statistics().items():
        if len(dots) != 1:
            yield f"dot count well defined for {lam!r}", "one value", sorted(dots)
            continue
        (m,) = dots
        if (-1) ** m * count != x.coefficient(lam):
            yield f"(-1)^m |S| for {lam!r}", x.coefficient(lam), (-1) ** m * count
    if trace.coefficients_from_paths() != x:
        yield "signed path sum", x.to_text(), trace.coefficients_from_paths().to_text()


SUITES: dict[str, Check] = {
    "oracle": check_oracle,
    "lead": check_lead,
    "hooks": check_hooks,
    "adjacency": check_adjacency,
    "internal": check_internal,
    "reconstruct": check_reconstruct,
    "edge-order": check_edge_order,
    "trace": check_trace,
}


def _trees(min_n: int, max_n: int) -> Iterator[Forest]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_trees(n)


def run_suite(
    name: str,
    max_n: int,
    seed: int = 0,
    min_n: int = 1,
    random_trees: int = 0,
    random_sizes: Iterable[int] = (9, 10),
    trees: Iterable[Forest] | None = None,
) -> VerificationReport | list[VerificationReport]:
    """Run suite ``name`` over all trees with ``min_n <= n <= max_n``.

    ``random_trees`` extra seeded random labeled trees with sizes drawn from
    ``random_sizes`` are appended (used by ``edge-order``).  ``"all"``
    returns one report per suite.
    """
    if name == "all":
        return [run_suite(s, max_n, seed, min_n, random_trees, random_sizes) for s in SUITES]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    check = SUITES[name]
    rng = random.Random(seed)
    start = time.perf_counter()
    report = VerificationReport(name, (min_n, max_n))
    pool = list(trees) if trees is not None else list(_trees(min_n, max_n))
    sizes = list(random_sizes)
    for _ in range(random_trees):
        pool.append(random_tree(rng.choice(sizes), rng))
    for t in pool:
        report.trees_checked += 1
        for prop, want, got in check(t, rng):
            report.failures.append(Failure(format_edge_list(t, header=False).strip(), prop, str(want), str(got)))
    report.failures.sort()
    report.elapsed = time.perf_counter() - start
    log.info("suite %s: %d trees, %d failures", name, report.trees_checked, len(report.failures))
    return report


# -- census ----------------------------------------------------------------------


@dataclass
class CensusRecord:
    canonical: bytes
    expansion: object  # SymFunc
    n: int

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "version": CENSUS_VERSION,
                "n": self.n,
                "canonical": self.canonical.decode("ascii"),
                "csf": self.expansion.to_json_obj(),
            }
        )

    @classmethod
    def from_json_line(cls, line: str) -> "CensusRecord":
        obj = json.loads(line)
        if obj.get("version") != CENSUS_VERSION:
            raise ValueError(f"unsupported census record version {obj.get('version')}")
        return cls(obj["canonical"].encode("ascii"), from_json_obj(obj["csf"]), obj["n"])


@dataclass
class CensusReport:
    max_n: int
    trees: int
    per_n: dict[int, int]
    collisions: list[tuple[bytes, ...]]

    def to_json_obj(self) -> dict:
        return {
            "max_n": self.max_n,
            "trees": self.trees,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
            "collisions": [[c.decode("ascii") for c in group] for group in self.collisions],
        }


def conjecture_census(max_n: int, store: str | Path | None = None, limit: int = 12) -> CensusReport:
    """Group all trees on ``1..max_n`` vertices by star expansion; report collisions.

    With ``store``, records are read from and appended to a line-delimited
    JSON file keyed by canonical form, so reruns skip finished trees.
    """
    if max_n > limit:
        raise ValueError(f"max_n={max_n} exceeds the census limit {limit}")
    known: dict[bytes, CensusRecord] = {}
    handle = None
    if store is not None:
        store = Path(store)
        if store.exists():
            for line in store.read_text().splitlines():
                if line.strip():
                    rec = CensusRecord.from_json_line(line)
                    known[rec.canonical] = rec
        handle = store.open("a")
    collisions = []
    per_n = {}
    total = 0
    try:
        for n in range(1, max_n + 1):
            groups: dict[str, list[bytes]] = defaultdict(list)
            count = 0
            for t in enumerate_trees(n):
                code = t.canonical_form()
                rec = known.get(code)
                if rec is None:
                    rec = CensusRecord(code, star_expand(t), n)
                    if handle is not None:
                        handle.write(rec.to_json_line() + "\n")
                groups[rec.expansion.to_text()].append(code)
                count += 1
            per_n[n] = count
            total += count
            collisions += [tuple(sorted(g)) for g in groups.values() if len(g) > 1]
    finally:
        if handle is not None:
            handle.close()
    return CensusReport(max_n, total, per_n, sorted(collisions))
