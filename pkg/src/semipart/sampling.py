"""Seeded random generators for symbolic reals.

Every generator takes an explicit :class:`random.Random` so that a run is a
pure function of its seed.  String seeds are used to split independent
streams (``stream(cfg, "closure")``); CPython seeds ``Random`` from a string
via SHA-512, so streams do not depend on ``PYTHONHASHSEED``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from .hamel import BasisElement, HamelReal, ZERO, make_real, max_index
from .sumset import INF, Interval, IntervalUnion, normalize


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    count: int = 1000
    max_terms: int = 8
    max_index: int = 20
    max_point_len: int = 8
    coeff_bound: int = 100

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("count must be >= 0")
        for name in ("max_terms", "max_index", "max_point_len", "coeff_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


def stream(cfg: SampleConfig, name: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{name}")


def _between(rng: random.Random, lo: int, hi: int) -> int:
    # randint without randrange's argument checks; bias is below 2**-53 for these small ranges
    return lo + int(rng.random() * (hi - lo + 1))


# draws repeat a small set of values, so build each immutable value once
_element = lru_cache(maxsize=1 << 16)(BasisElement)
_fraction = lru_cache(maxsize=1 << 16)(Fraction)


def random_point(rng: random.Random, max_len: int) -> str:
    n = _between(rng, 0, max_len)
    if not n:
        return ""
    return format(rng.getrandbits(n), f"0{n}b").rstrip("0")


def random_rational(rng: random.Random, bound: int) -> Fraction:
    """Nonzero rational with numerator and denominator bounded by ``bound``."""
    # one uniform draw over (sign, numerator, denominator)
    i = int(rng.random() * (2 * bound * bound))
    sign, i = (1, i) if i < bound * bound else (-1, i - bound * bound)
    return _fraction(sign * (i // bound + 1), i % bound + 1)


def random_positive_rational(rng: random.Random, bound: int) -> Fraction:
    i = int(rng.random() * (bound * bound))
    return _fraction(i // bound + 1, i % bound + 1)


def random_real(rng: random.Random, cfg: SampleConfig, *, lo: int = 0, hi: int | None = None) -> HamelReal:
    """A random real with pieces in ``[lo, hi]`` (``hi`` defaults to ``cfg.max_index``).

    Half of the draws are rebalanced so that the coefficients on the top
    piece sum to zero, which pushes the classifying cylinder past ``k=1``.
    The result may be zero when terms cancel.
    """
    if hi is None:
        hi = cfg.max_index
    n = _between(rng, 1, cfg.max_terms)
    pairs = [
        (_element(_between(rng, lo, hi), random_point(rng, cfg.max_point_len)),
         random_rational(rng, cfg.coeff_bound))
        for _ in range(n)
    ]
    x = make_real(pairs)
    if x and rng.random() < 0.5:
        x = _cancel_top(x, rng)
    return x


def _cancel_top(x: HamelReal, rng: random.Random) -> HamelReal:
    top = max_index(x)
    elems = [e for e in x if e.piece == top]
    if len(elems) < 2:
        return x
    pivot = rng.choice(elems)
    rest = sum((x[e] for e in elems if e != pivot), Fraction(0))
    if not rest:
        return x
    return make_real([(e, c) for e, c in x.items() if e != pivot] + [(pivot, -rest)])


def random_nonzero_real(rng: random.Random, cfg: SampleConfig, **kw) -> HamelReal:
    while True:
        x = random_real(rng, cfg, **kw)
        if x:
            return x


def random_lower_noise(rng: random.Random, cfg: SampleConfig, alpha: int) -> HamelReal:
    """A random real supported on pieces strictly below ``alpha`` (zero when ``alpha == 0``)."""
    if alpha == 0:
        return ZERO
    return random_real(rng, cfg, lo=0, hi=alpha - 1)


def random_union(rng: random.Random, *, parts: int = 3, lo=-10, hi=10, denom: int = 6,
                 point_prob: float = 0.2, unbounded_prob: float = 0.0) -> IntervalUnion:
    """A random normalized interval union with endpoints in ``[lo, hi]`` over denominators ``<= denom``."""
    def rat():
        d = rng.randint(1, denom)
        return Fraction(rng.randint(int(lo * d), int(hi * d)), d)

    out = []
    for _ in range(rng.randint(1, parts)):
        a = rat()
        if rng.random() < point_prob:
            out.append(Interval(a, a))
            continue
        c = rat()
        while c == a:
            c = rat()
        a, c = min(a, c), max(a, c)
        out.append(Interval(a, c, rng.random() < 0.5, rng.random() < 0.5))
    if rng.random() < unbounded_prob:
        a = rat()
        if rng.random() < 0.5:
            out.append(Interval(a, INF, rng.random() < 0.5, False))
        else:
            out.append(Interval(-INF, a, False, rng.random() < 0.5))
    return normalize(out)
