"""Sparse exact symmetric functions in the star or power-sum basis.

Both bases are multiplicative (``st_lambda = prod st_{lambda_i}``,
``p_lambda = prod p_{lambda_i}``), so a product of basis elements is
indexed by the union of their partitions.  Coefficients are Python ints
when integral and :class:`fractions.Fraction` otherwise.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .partition import Partition, parse as parse_partition

BASES = ("star", "power")
_PREFIX = {"star": "st", "power": "p"}


def _normalize(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        raise TypeError("boolean coefficient")
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


class SymFunc:
    """A homogeneous symmetric function of degree ``degree`` in one basis."""

    __slots__ = ("basis", "degree", "_terms")

    def __init__(self, basis: str, degree: int, terms: Mapping | Iterable = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, object] = {}
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.n != degree:
                raise ValueError(f"partition {lam!r} is not of degree {degree}")
            acc[lam] = acc.get(lam, 0) + c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(
            self, "_terms", {lam: _normalize(c) for lam, c in acc.items() if c != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int], coeff=1) -> "SymFunc":
        lam = Partition(lam)
        return cls(basis, lam.n, {lam: coeff})

    @classmethod
    def one(cls, basis: str = "star") -> "SymFunc":
        return cls(basis, 0, {Partition(): 1})

    @classmethod
    def zero(cls, basis: str, degree: int) -> "SymFunc":
        return cls(basis, degree)

    @property
    def terms(self) -> dict[Partition, object]:
        return dict(self._terms)

    def items(self):
        """Terms in increasing lexicographic order."""
        return sorted(self._terms.items())

    def support(self) -> list[Partition]:
        return sorted(self._terms)

    def coefficient(self, lam: Iterable[int]):
        return self._terms.get(Partition(lam), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    # -- linear structure -------------------------------------------------

    def _compatible(self, other: "SymFunc") -> None:
        if not isinstance(other, SymFunc):
            raise TypeError(f"expected SymFunc, got {type(other).__name__}")
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._compatible(other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, self.degree, out)

    def __neg__(self) -> "SymFunc":
        return self.scale(-1)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {lam: c * v for lam, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.basis, self.degree, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"SymFunc({self.basis!r}, {self.degree}, {self.to_text()!r})"

    # -- formats ----------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        prefix = _PREFIX[self.basis]
        out = []
        for lam, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = f"{prefix}{lam!r}" if mag == 1 else f"{mag} {prefix}{lam!r}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.degree,
            "terms": [{"partition": lam.to_json(), "coeff": str(c)} for lam, c in self.items()],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_json_obj(), **kwargs)


def equals(f: SymFunc, g: SymFunc) -> bool:
    f._compatible(g)
    return f == g


def add(f: SymFunc, g: SymFunc) -> SymFunc:
    return f + g


def scale(f: SymFunc, c) -> SymFunc:
    return f.scale(c)


def coefficient(f: SymFunc, lam) -> object:
    return f.coefficient(lam)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in a multiplicative basis: coefficients convolve over partition union."""
    if f.basis != g.basis:
        raise ValueError(f"cannot multiply {f.basis} by {g.basis}")
    out: dict[tuple, object] = {}
    for a, x in f._terms.items():
        for b, y in g._terms.items():
            k = _merge(a, b)
            out[k] = out.get(k, 0) + x * y
    return SymFunc(f.basis, f.degree + g.degree, {Partition(k): c for k, c in out.items()})


def _power_of(f: SymFunc, e: int) -> SymFunc:
    out = SymFunc.one(f.basis)
    for _ in range(e):
        out = multiply(out, f)
    return out


# -- change of basis ---------------------------------------------------------


@lru_cache(maxsize=None)
def star_monomial_to_power(k: int) -> SymFunc:
    """``st_k`` in the power basis: ``sum_r (-1)^r C(k-1, r) p_(r+1, 1^(k-r-1))``."""
    if k < 1:
        raise ValueError("star order must be positive")
    terms = {
        Partition((r + 1,) + (1,) * (k - r - 1)): (-1) ** r * comb(k - 1, r) for r in range(k)
    }
    return SymFunc("power", k, terms)


@lru_cache(maxsize=None)
def _star_to_power(lam: Partition) -> SymFunc:
    out = SymFunc.one("power")
    for k in lam:
        out = multiply(out, star_monomial_to_power(k))
    return out


@lru_cache(maxsize=None)
def power_monomial_to_star(k: int) -> SymFunc:
    """``p_k`` in the star basis.

    ``st_k`` contains ``p_k`` with coefficient ``(-1)^(k-1)``; every other
    term is ``p_(r+1) p_1^(k-r-1)`` with ``r+1 < k``, already known in the
    star basis, and ``p_1 = st_1``.  Coefficients stay integral.
    """
    if k < 1:
        raise ValueError("power index must be positive")
    if k == 1:
        return SymFunc.basis_element("star", (1,))
    st1 = SymFunc.basis_element("star", (1,))
    rest = SymFunc.basis_element("star", (k,))
    for r in range(k - 1):
        term = multiply(power_monomial_to_star(r + 1), _power_of(st1, k - r - 1))
        rest = rest - term.scale((-1) ** r * comb(k - 1, r))
    return rest.scale((-1) ** (k - 1))


@lru_cache(maxsize=None)
def _power_to_star(lam: Partition) -> SymFunc:
    out = SymFunc.one("star")
    for k in lam:
        out = multiply(out, power_monomial_to_star(k))
    return out


def _convert(f: SymFunc, table, target: str) -> SymFunc:
    out: dict[Partition, object] = {}
    for lam, c in f._terms.items():
        for mu, d in table(lam)._terms.items():
            out[mu] = out.get(mu, 0) + c * d
    return SymFunc(target, f.degree, out)


def to_power(f: SymFunc) -> SymFunc:
    if f.basis == "power":
        return f
    return _convert(f, _star_to_power, "power")


def to_star(f: SymFunc) -> SymFunc:
    if f.basis == "star":
        return f
    return _convert(f, _power_to_star, "star")


def evaluate_at_ones(f: SymFunc, k: int) -> object:
    """Principal specialization at ``k`` ones: ``p_lambda -> k^len(lambda)``."""
    if k < 1:
        raise ValueError("k must be positive")
    f = to_power(f)
    return _normalize(sum(c * k ** len(lam) for lam, c in f._terms.items()))


# -- parsing -----------------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(st|p)\s*(\([\d,\s]*\))")


def parse_text(text: str) -> SymFunc:
    """Parse the text rendering, e.g. ``"-st(4,2,1) + 2 st(4,3)"``."""
    s = text.strip().replace("−", "-")
    pos = 0
    basis = None
    terms: dict[Partition, object] = {}
    degree = None
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse symmetric function at {s[pos:]!r}")
        sign, mag, prefix, lam_text = m.groups()
        b = "star" if prefix == "st" else "power"
        if basis is None:
            basis = b
        elif basis != b:
            raise ValueError("mixed bases in one expression")
        lam = parse_partition(lam_text)
        c = Fraction(mag) if mag else Fraction(1)
        if sign == "-":
            c = -c
        terms[lam] = terms.get(lam, 0) + c
        if degree is None:
            degree = lam.n
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
    if basis is None:
        raise ValueError("empty expression")
    return SymFunc(basis, degree, terms)


def from_json_obj(obj: dict) -> SymFunc:
    try:
        basis, n, terms = obj["basis"], int(obj["n"]), obj["terms"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed SymFunc JSON: missing {exc}") from None
    items = []
    for t in terms:
        items.append((parse_partition(t["partition"]), Fraction(str(t["coeff"]))))
    return SymFunc(basis, n, items)


def from_json(text: str) -> SymFunc:
    return from_json_obj(json.loads(text))
