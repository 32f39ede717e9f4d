"""Decomposition of the symbolic reals into ``kappa`` additive semigroups via the leading coordinate.

Order the basis by ``(piece, point)``.  For ``x != 0`` let ``f(x)`` be the
piece of the least basis element in the support of ``x`` and ``g(x)`` its
coefficient.  For ``a < kappa'`` the piece ``B_a`` collects the ``x`` with
``f(x) = a`` and ``g(x) > 0``; everything else (zero, negative leading
coefficient, or leading piece ``>= kappa'``) forms the remainder.  Here
``kappa' = kappa - 1`` for finite ``kappa`` and the remainder has no index
cutoff when ``kappa`` is :data:`ALL`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from .hamel import BasisElement, HamelReal, UndefinedForZero, ZERO, add, make_real
from .sampling import SampleConfig, random_point, random_positive_rational, random_rational, random_real

ALL = "all"
Kappa = Union[int, Literal["all"]]

PIECE, REMAINDER = "Piece", "Remainder"


class InvalidLabel(ValueError):
    pass


def check_kappa(kappa: Kappa) -> Kappa:
    if kappa == ALL:
        return ALL
    if isinstance(kappa, bool) or not isinstance(kappa, int) or kappa < 1:
        raise ValueError(f"kappa must be a positive integer or {ALL!r}, got {kappa!r}")
    return kappa


def piece_cutoff(kappa: Kappa) -> int | None:
    """``kappa'``: number of ``B`` pieces, or ``None`` when unbounded."""
    kappa = check_kappa(kappa)
    return None if kappa == ALL else kappa - 1


@dataclass(frozen=True)
class PropLabel:
    tag: str
    alpha: int | None = None

    def __post_init__(self) -> None:
        if self.tag == PIECE:
            if self.alpha is None or self.alpha < 0:
                raise ValueError("Piece label needs alpha >= 0")
        elif self.tag == REMAINDER:
            if self.alpha is not None:
                raise ValueError("Remainder carries no alpha")
        else:
            raise ValueError(f"unknown tag {self.tag!r}")

    @classmethod
    def piece(cls, alpha: int) -> "PropLabel":
        return cls(PIECE, alpha)

    @classmethod
    def remainder(cls) -> "PropLabel":
        return cls(REMAINDER)

    def valid_for(self, kappa: Kappa) -> bool:
        cut = piece_cutoff(kappa)
        return self.tag == REMAINDER or cut is None or self.alpha < cut

    def __str__(self) -> str:
        return REMAINDER if self.tag == REMAINDER else f"Piece alpha={self.alpha}"


def first_index_and_coeff(x: HamelReal) -> tuple[int, Fraction]:
    """``(f(x), g(x))``: piece and coefficient of the least basis element of ``x``."""
    if not x:
        raise UndefinedForZero("f and g are undefined at 0")
    lead = min(x._terms)
    return lead.piece, x._terms[lead]


def classify_prop11(x: HamelReal, kappa: Kappa) -> PropLabel:
    cut = piece_cutoff(kappa)
    if not x:
        return PropLabel.remainder()
    f, g = first_index_and_coeff(x)
    if g > 0 and (cut is None or f < cut):
        return PropLabel.piece(f)
    return PropLabel.remainder()


def witness_prop11(label: PropLabel, kappa: Kappa) -> HamelReal:
    if not label.valid_for(kappa):
        raise InvalidLabel(f"{label} is not a piece when kappa={kappa}")
    if label.tag == REMAINDER:
        return ZERO
    return make_real([(BasisElement(label.alpha, ""), 1)])


def all_labels(kappa: Kappa, limit: int | None = None) -> list[PropLabel]:
    """Labels of every piece for finite ``kappa``; for :data:`ALL` the first ``limit`` pieces."""
    cut = piece_cutoff(kappa)
    if cut is None:
        if limit is None:
            raise ValueError("kappa='all' needs an explicit limit")
        cut = limit
    return [PropLabel.piece(a) for a in range(cut)] + [PropLabel.remainder()]


def random_piece_member(rng: random.Random, cfg: SampleConfig, alpha: int) -> HamelReal:
    """A random ``x`` with ``f(x) = alpha`` and ``g(x) > 0``.

    The leading point is drawn from a small pool so that pairs often share
    their leading element, where the two positive coefficients add up.
    """
    lead = BasisElement(alpha, rng.choice(("", "1", "01", "11")))
    pairs: list[tuple[BasisElement, Fraction]] = [(lead, random_positive_rational(rng, cfg.coeff_bound))]
    for _ in range(rng.randint(0, cfg.max_terms - 1)):
        e = BasisElement(rng.randint(alpha, alpha + cfg.max_index), random_point(rng, cfg.max_point_len))
        if e > lead:
            pairs.append((e, random_rational(rng, cfg.coeff_bound)))
    return make_real(pairs)


def random_remainder_member(rng: random.Random, cfg: SampleConfig, kappa: Kappa) -> HamelReal:
    """A random element of the remainder, drawn by rejection from a mixed family."""
    while True:
        r = rng.random()
        if r < 0.05:
            return ZERO
        x = random_real(rng, cfg)
        if r < 0.5 and x:
            # flip so that the leading coefficient is negative
            _, g = first_index_and_coeff(x)
            if g > 0:
                x = -x
        if classify_prop11(x, kappa).tag == REMAINDER:
            return x


@dataclass(frozen=True)
class ClosureFailure:
    kappa: Kappa
    label: PropLabel
    x: HamelReal
    y: HamelReal
    got: PropLabel


def check_closure_prop11(kappa: Kappa, pairs: int, cfg: SampleConfig) -> list[ClosureFailure]:
    """Add ``pairs`` same-label pairs per label and return every closure failure.

    Pairs are split evenly between the pieces (at most ``cfg.max_index + 1``
    of them when ``kappa`` is :data:`ALL`) and the remainder.
    """
    rng = random.Random(f"{cfg.seed}:prop11:{kappa}")
    labels = all_labels(kappa, limit=cfg.max_index + 1)
    failures = []
    for i in range(pairs):
        lab = labels[i % len(labels)]
        if lab.tag == PIECE:
            x = random_piece_member(rng, cfg, lab.alpha)
            y = random_piece_member(rng, cfg, lab.alpha)
        else:
            x = random_remainder_member(rng, cfg, kappa)
            y = random_remainder_member(rng, cfg, kappa)
        for z in (x, y):
            if classify_prop11(z, kappa) != lab:
                failures.append(ClosureFailure(kappa, lab, z, z, classify_prop11(z, kappa)))
        got = classify_prop11(add(x, y), kappa)
        if got != lab:
            failures.append(ClosureFailure(kappa, lab, x, y, got))
    return failures
