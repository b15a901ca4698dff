"""Integer partitions: the index set of every symmetric-function basis.

A :class:`Partition` is an immutable, hashable tuple of positive integers in
weakly decreasing order.  Ordering between partitions is lexicographic and is
only defined for partitions of the same integer.
"""

from __future__ import annotations

import json
from collections import Counter
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The constructor accepts any iterable of positive integers and sorts it,
    so ``Partition([1, 4, 2]) == (4, 2, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = sorted((_as_part(p) for p in parts), reverse=True)
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return multiplicity(self, i)

    def __repr__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"

    __str__ = __repr__

    def to_json(self) -> list[int]:
        return list(self)

    # Lexicographic order restricted to a fixed degree.
    def _check(self, other) -> None:
        if isinstance(other, tuple) and sum(other) != sum(self):
            raise ValueError(
                f"cannot order partitions of different integers: {self!r} vs {other!r}"
            )

    def __lt__(self, other):
        self._check(other)
        return tuple.__lt__(self, other)

    def __le__(self, other):
        self._check(other)
        return tuple.__le__(self, other)

    def __gt__(self, other):
        self._check(other)
        return tuple.__gt__(self, other)

    def __ge__(self, other):
        self._check(other)
        return tuple.__ge__(self, other)


def _as_part(p) -> int:
    if isinstance(p, bool) or int(p) != p:
        raise ValueError(f"partition parts must be integers, got {p!r}")
    p = int(p)
    if p < 1:
        raise ValueError(f"partition parts must be positive, got {p}")
    return p


def from_multiset(values: Iterable[int]) -> Partition:
    """Sort a multiset of positive integers into a partition."""
    return Partition(values)


def lex_compare(a: Partition, b: Partition) -> int:
    """Return -1, 0 or 1 as ``a`` is lexicographically less, equal, or greater.

    Raises ``ValueError`` when ``a`` and ``b`` partition different integers.
    """
    a, b = Partition(a), Partition(b)
    if a == b:
        return 0
    return -1 if a < b else 1


def multiset_difference(a: Iterable[int], b: Iterable[int]) -> Partition:
    """Multiset difference: part ``i`` occurs ``max(m_i(a) - m_i(b), 0)`` times."""
    diff = Counter(a)
    diff.subtract(Counter(b))
    return Partition(p for p, m in diff.items() for _ in range(max(m, 0)))


def multiplicity(a: Iterable[int], i: int) -> int:
    if i < 1:
        raise ValueError("multiplicity is defined for positive parts only")
    return sum(1 for p in a if p == i)


def union(a: Iterable[int], b: Iterable[int]) -> Partition:
    return Partition((*a, *b))


def hook(n: int, m: int) -> Partition:
    """The hook shape ``(n - m, 1^m)``."""
    if not 0 <= m < n:
        raise ValueError(f"hook (n-m, 1^m) needs 0 <= m < n, got n={n}, m={m}")
    return Partition((n - m,) + (1,) * m)


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in increasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition()
        return
    # Build in decreasing lex order, then reverse.
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, max_part), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    yield from reversed(out)


def parse(text) -> Partition:
    """Parse ``"(4,2,1)"``, ``"[4,2,1]"``, ``"4,2,1"`` or a JSON list.

    The text form must already be weakly decreasing; a parsed list that is
    not is rejected rather than silently sorted.
    """
    if isinstance(text, (list, tuple)):
        values = list(text)
    else:
        s = str(text).strip()
        if s.startswith("["):
            values = json.loads(s)
        else:
            s = s.strip("()").strip()
            values = [int(tok) for tok in s.split(",") if tok.strip()] if s else []
    part = Partition(values)
    if list(part) != [int(v) for v in values]:
        raise ValueError(f"parts must be weakly decreasing: {text!r}")
    return part
