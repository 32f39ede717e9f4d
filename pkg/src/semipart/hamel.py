"""Symbolic reals over a Hamel basis split into disjoint Cantor pieces.

A basis element is a pair ``(piece, point)``: ``piece`` is the index of the
Cantor set the element lives in and ``point`` is a finite binary string ``s``
standing for the eventually-zero sequence ``s000...``.  A :class:`HamelReal`
is a finite rational combination of basis elements, stored sparsely with no
zero coefficients, so equality of mappings is equality of reals.

Cylinders of a piece are enumerated in length-lexicographic order of their
defining strings: ``k=1`` is the empty string (the whole piece), ``k=2`` is
``"0"``, ``k=3`` is ``"1"``, ``k=4`` is ``"00"`` and so on.  Equivalently the
string of ``k`` is the binary expansion of ``k`` with its leading ``1``
dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping

__all__ = [
    "BasisElement",
    "HamelReal",
    "Cylinder",
    "ZERO",
    "NonCanonicalPoint",
    "UndefinedForZero",
    "b",
    "make_real",
    "add",
    "scale",
    "support",
    "max_index",
    "coeff_sum",
    "cylinder_string",
    "cylinder_index",
    "cylinder_contains",
    "lex_index_bound",
    "is_canonical_point",
]


class NonCanonicalPoint(ValueError):
    """A point string is not a canonical code of a Cantor point."""


class UndefinedForZero(ValueError):
    """The operation has no value at the zero real."""


def is_canonical_point(point: str) -> bool:
    if not isinstance(point, str):
        return False
    if point.strip("01"):
        return False
    return point == "" or point[-1] == "1"


@dataclass(frozen=True, order=True, slots=True)
class BasisElement:
    piece: int
    point: str = ""
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.piece, int) or self.piece < 0:
            raise ValueError(f"piece index must be a natural number, got {self.piece!r}")
        if not is_canonical_point(self.point):
            raise NonCanonicalPoint(
                f"point {self.point!r} is not canonical (binary, no trailing zero)"
            )
        # elements are dict keys in every real; hash once
        object.__setattr__(self, "_hash", hash((self.piece, self.point)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return f"b({self.piece},{self.point})"


def b(piece: int, point: str = "") -> BasisElement:
    """Shorthand constructor used throughout tests and examples."""
    return BasisElement(piece, point)


def _as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, Rational)):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q)
    raise TypeError(f"coefficients must be exact rationals, got {type(q).__name__}")


class HamelReal(Mapping[BasisElement, Fraction]):
    """Immutable sparse map ``BasisElement -> nonzero Fraction``.

    Supports ``+``, unary and binary ``-`` and multiplication by rationals.
    Iteration follows canonical order, ``(piece, point)`` ascending.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[BasisElement, Fraction] | None = None):
        # trusted path: callers inside this module pass already-clean dicts
        self._terms: dict[BasisElement, Fraction] = dict(terms) if terms else {}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[BasisElement, Fraction]) -> "HamelReal":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def __getitem__(self, key: BasisElement) -> Fraction:
        return self._terms[key]

    def __iter__(self) -> Iterator[BasisElement]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, e: BasisElement) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, HamelReal):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "HamelReal") -> "HamelReal":
        if not isinstance(other, HamelReal):
            return NotImplemented
        return add(self, other)

    def __neg__(self) -> "HamelReal":
        return HamelReal._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "HamelReal") -> "HamelReal":
        if not isinstance(other, HamelReal):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, q) -> "HamelReal":
        if isinstance(q, HamelReal):
            return NotImplemented
        return scale(q, self)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.items()):
            if i == 0:
                out.append(f"{c}*{e}")
            elif c < 0:
                out.append(f" - {-c}*{e}")
            else:
                out.append(f" + {c}*{e}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"HamelReal({str(self)!r})"


ZERO = HamelReal()


def make_real(pairs: Iterable[tuple[BasisElement, object]]) -> HamelReal:
    """Canonicalize a list of ``(basis element, coefficient)`` pairs.

    Repeated basis elements are merged and zero sums dropped.  Points are
    validated when the :class:`BasisElement` is built; tuples ``(piece,
    point)`` are accepted in place of basis elements.
    """
    acc: dict[BasisElement, Fraction] = {}
    for e, q in pairs:
        if not isinstance(e, BasisElement):
            e = BasisElement(*e)
        q = _as_fraction(q)
        s = acc.get(e)
        acc[e] = q if s is None else s + q
    return HamelReal._raw({e: c for e, c in acc.items() if c})


def add(x: HamelReal, y: HamelReal) -> HamelReal:
    if len(x._terms) < len(y._terms):
        x, y = y, x
    out = dict(x._terms)
    for e, c in y._terms.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s += c
            if s:
                out[e] = s
            else:
                del out[e]
    return HamelReal._raw(out)


def scale(q, x: HamelReal) -> HamelReal:
    q = _as_fraction(q)
    if not q:
        return ZERO
    if q == 1:
        return x
    return HamelReal._raw({e: q * c for e, c in x._terms.items()})


def support(x: HamelReal) -> frozenset[BasisElement]:
    return frozenset(x._terms)


def max_index(x: HamelReal) -> int:
    if not x._terms:
        raise UndefinedForZero("max_index of 0: the index set is empty")
    return max(e.piece for e in x._terms)


def coeff_sum(x: HamelReal, J: Callable[[BasisElement], bool]) -> Fraction:
    """Sum of the coefficients of ``x`` on basis elements satisfying ``J``."""
    return sum((c for e, c in x._terms.items() if J(e)), Fraction(0))


def cylinder_string(k: int) -> str:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"cylinder index must be >= 1, got {k!r}")
    return bin(k)[3:]


def cylinder_index(t: str) -> int:
    """Inverse of :func:`cylinder_string`."""
    if t.strip("01"):
        raise ValueError(f"not a binary string: {t!r}")
    return int("1" + t, 2)


def _in_cylinder(p: str, t: str) -> bool:
    n = len(t)
    if len(p) >= n:
        return p[:n] == t
    return t[: len(p)] == p and "1" not in t[len(p):]


def cylinder_contains(p: str, k: int) -> bool:
    """Whether the Cantor point ``p000...`` lies in cylinder ``k``."""
    if not is_canonical_point(p):
        raise NonCanonicalPoint(f"point {p!r} is not canonical")
    return _in_cylinder(p, cylinder_string(k))


@dataclass(frozen=True, slots=True)
class Cylinder:
    """Predicate for the basis elements of ``piece`` lying in cylinder ``k``."""

    piece: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"cylinder index must be >= 1, got {self.k}")

    @property
    def string(self) -> str:
        return cylinder_string(self.k)

    def __call__(self, e: BasisElement) -> bool:
        return e.piece == self.piece and _in_cylinder(e.point, cylinder_string(self.k))


def lex_index_bound(points: Iterable[str]) -> int:
    """A cylinder index below which any finite point set is separated.

    Every length-``L`` string (``L`` the longest point) has index below
    ``2**(L+1)``, and the padded points are pairwise distinct, so some
    cylinder of length ``L`` holds exactly one of them.  The bound returned is
    the smallest index of ``p + "0"*(L+1)`` over the points ``p``.
    """
    pts = list(points)
    if not pts:
        raise ValueError("empty point set")
    m = 1 + max(len(p) for p in pts)
    return min(cylinder_index(p + "0" * m) for p in pts)
