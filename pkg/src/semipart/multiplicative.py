"""Multiplicative pieces of the real line.

The four sets ``(-1,0) u (0,1)``, ``(-inf,-1) u (1,inf)``, ``{-1,1}`` and
``{0}`` are not closed under products of one another, but their refinement
into seven sign/magnitude atoms is: every product of two atoms is a union of
atoms.  This module holds the atom product table, closure decisions for
unions of atoms, the enumeration of the closed unions of the four generators,
and the logarithm bridge to the additive classifier.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .classifier import Label, classify
from .hamel import HamelReal, add
from .sumset import INF, IntervalUnion, Interval, is_triple_closed, normalize, point


class Atom(enum.Enum):
    NEG_BIG = "nbig"
    NEG_ONE = "none"
    NEG_SMALL = "nsmall"
    ZERO = "zero"
    POS_SMALL = "psmall"
    POS_ONE = "pone"
    POS_BIG = "pbig"

    @property
    def sign(self) -> int:
        return _SIGN[self]

    @property
    def magnitude(self) -> str:
        return _MAG[self]

    @property
    def interval(self) -> Interval:
        return _INTERVAL[self]

    @classmethod
    def from_name(cls, name: str) -> "Atom":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown atom {name!r}; expected one of "
                             + ", ".join(a.value for a in cls)) from None


ATOMS: tuple[Atom, ...] = tuple(Atom)

_SIGN = {
    Atom.NEG_BIG: -1, Atom.NEG_ONE: -1, Atom.NEG_SMALL: -1, Atom.ZERO: 0,
    Atom.POS_SMALL: 1, Atom.POS_ONE: 1, Atom.POS_BIG: 1,
}
_MAG = {
    Atom.NEG_BIG: "big", Atom.NEG_ONE: "one", Atom.NEG_SMALL: "small", Atom.ZERO: "zero",
    Atom.POS_SMALL: "small", Atom.POS_ONE: "one", Atom.POS_BIG: "big",
}
_INTERVAL = {
    Atom.NEG_BIG: Interval(-INF, -1, False, False),
    Atom.NEG_ONE: point(-1),
    Atom.NEG_SMALL: Interval(-1, 0, False, False),
    Atom.ZERO: point(0),
    Atom.POS_SMALL: Interval(0, 1, False, False),
    Atom.POS_ONE: point(1),
    Atom.POS_BIG: Interval(1, INF, False, False),
}
_BY_SIGN_MAG = {(a.sign, a.magnitude): a for a in ATOMS}

# magnitude classes of |x|*|y|: (0,1) times (1,inf) sweeps all of (0,inf)
_MAG_PRODUCT = {
    ("small", "small"): ("small",),
    ("small", "one"): ("small",),
    ("small", "big"): ("small", "one", "big"),
    ("one", "one"): ("one",),
    ("one", "big"): ("big",),
    ("big", "big"): ("big",),
}

PieceSet = frozenset  # frozenset[Atom]

I1: PieceSet = frozenset({Atom.NEG_SMALL, Atom.POS_SMALL})
I2: PieceSet = frozenset({Atom.NEG_BIG, Atom.POS_BIG})
P: PieceSet = frozenset({Atom.NEG_ONE, Atom.POS_ONE})
Z: PieceSet = frozenset({Atom.ZERO})
GENERATORS: tuple[tuple[str, PieceSet], ...] = (("I1", I1), ("I2", I2), ("P", P), ("Z", Z))
ALL_ATOMS: PieceSet = frozenset(ATOMS)


def atom_product(a: Atom, b: Atom) -> PieceSet:
    """The set ``{x*y : x in a, y in b}`` as a union of atoms."""
    if a is Atom.ZERO or b is Atom.ZERO:
        return frozenset({Atom.ZERO})
    mags = _MAG_PRODUCT.get((a.magnitude, b.magnitude)) or _MAG_PRODUCT[(b.magnitude, a.magnitude)]
    sign = a.sign * b.sign
    return frozenset(_BY_SIGN_MAG[(sign, m)] for m in mags)


PRODUCT_TABLE: dict[tuple[Atom, Atom], PieceSet] = {
    (a, b): atom_product(a, b) for a in ATOMS for b in ATOMS
}


def product_set(S: Iterable[Atom], T: Iterable[Atom]) -> PieceSet:
    T = tuple(T)
    out: set[Atom] = set()
    for a in S:
        for b in T:
            out |= PRODUCT_TABLE[(a, b)]
    return frozenset(out)


def is_mult_closed(S: PieceSet) -> bool:
    return product_set(S, S) <= S


def is_triple_mult_closed(S: PieceSet) -> bool:
    return product_set(product_set(S, S), S) <= S


def as_interval_union(S: Iterable[Atom]) -> IntervalUnion:
    return normalize(a.interval for a in S)


def generator_union(mask: int) -> PieceSet:
    """Union of the generators selected by bits ``I1=1, I2=2, P=4, Z=8``."""
    out: frozenset = frozenset()
    for bit, (_, g) in enumerate(GENERATORS):
        if mask >> bit & 1:
            out |= g
    return out


def generator_names(S: PieceSet) -> list[str]:
    return [name for name, g in GENERATORS if g <= S]


def _canonical_masks() -> list[int]:
    # group by which of I1/I2 is present (I1, I2, both, neither), then by P/Z
    return sorted(range(16), key=lambda m: ((m & 3) or 4, m >> 2))


def enumerate_closed_generator_unions() -> list[PieceSet]:
    """Closed unions of generators that contain ``I1`` or ``I2``.

    Unions avoiding both ``I1`` and ``I2`` are finite sets, so null and
    meager; these are the ones excluded.
    """
    out = []
    for mask in _canonical_masks():
        S = generator_union(mask)
        if mask & 3 and is_mult_closed(S):
            out.append(S)
    return out


@dataclass(frozen=True)
class LogImage:
    """Image of an atom under ``x -> log(-x)`` and how closure transfers."""

    atom: Atom
    image: IntervalUnion
    mult_triple_closed: bool
    add_triple_closed: bool


def neg_log_atom(a: Atom) -> LogImage:
    """``log(-x)`` maps ``(-inf,-1)`` onto ``(0,inf)``; defined on that atom only.

    Triple products of numbers below ``-1`` stay below ``-1``, which is
    triple sums of positive logarithms staying positive.
    """
    if a is not Atom.NEG_BIG:
        raise ValueError(f"log(-x) bridge is only defined on nbig, got {a.value}")
    image = normalize([Interval(0, INF, False, False)])
    return LogImage(a, image, is_triple_mult_closed(frozenset({a})), is_triple_closed(image))


@dataclass(frozen=True)
class PosRealExp:
    """The positive real ``e**exponent``, multiplied by adding exponents."""

    exponent: HamelReal

    def __mul__(self, other: "PosRealExp") -> "PosRealExp":
        return PosRealExp(add(self.exponent, other.exponent))

    def inverse(self) -> "PosRealExp":
        return PosRealExp(-self.exponent)

    def __str__(self) -> str:
        return f"exp({self.exponent})"


def mult_classify(u: PosRealExp) -> Label:
    return classify(u.exponent)

