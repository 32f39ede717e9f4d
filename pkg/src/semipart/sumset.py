"""Exact arithmetic on finite unions of rational intervals.

Internally endpoints are turned into integer *keys* over a common
denominator ``D``.  A rational ``v = n/D`` gets key ``3n``; the position just
after ``v`` is ``3n+1`` and just before is ``3n-1``.  An interval becomes a
key range ``[s, e]``: a closed left end at ``v`` is ``3n``, an open one
``3n+1``; a closed right end ``3n``, an open one ``3n-1``.  Two sorted ranges
merge exactly when ``s2 <= e1 + 1``, and the closure rule for sums (closed
only if both ends are closed) is a residue correction after adding keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

import numpy as np

INF = math.inf

__all__ = [
    "Interval",
    "IntervalUnion",
    "EMPTY",
    "NoInterval",
    "UnsupportedInput",
    "PreconditionError",
    "Halfline",
    "closed",
    "open_interval",
    "point",
    "normalize",
    "minkowski_sum",
    "n_fold",
    "is_subset",
    "is_additively_closed",
    "is_triple_closed",
    "even_sum_halfline",
    "odd_sums_contained",
    "cantor_stage",
]


class NoInterval(ValueError):
    """``A + A`` has empty interior."""


class UnsupportedInput(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def _num(v) -> Fraction | float:
    if isinstance(v, float) and math.isinf(v):
        return v
    if isinstance(v, float):
        raise TypeError("finite endpoints must be exact rationals, not floats")
    return Fraction(v)


def _fmt(v) -> str:
    if v == INF:
        return "inf"
    if v == -INF:
        return "-inf"
    return str(v)


@dataclass(frozen=True)
class Interval:
    lo: Fraction | float
    hi: Fraction | float
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _num(self.lo))
        object.__setattr__(self, "hi", _num(self.hi))
        if self.lo == INF or self.hi == -INF:
            raise ValueError("interval must start below +inf and end above -inf")
        if (self.lo == -INF and self.lo_closed) or (self.hi == INF and self.hi_closed):
            raise ValueError("infinite endpoints must be open")
        if self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed)):
            raise ValueError(f"empty interval {self}")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo != -INF and self.hi != INF

    def __contains__(self, x) -> bool:
        lo_ok = self.lo < x or (self.lo_closed and self.lo == x)
        hi_ok = x < self.hi or (self.hi_closed and self.hi == x)
        return lo_ok and hi_ok

    def __str__(self) -> str:
        return "{}{},{}{}".format(
            "[" if self.lo_closed else "(", _fmt(self.lo), _fmt(self.hi),
            "]" if self.hi_closed else ")",
        )


def closed(lo, hi) -> Interval:
    return Interval(lo, hi, True, True)


def open_interval(lo, hi) -> Interval:
    return Interval(lo, hi, False, False)


def point(v) -> Interval:
    return Interval(v, v, True, True)


@dataclass(frozen=True)
class IntervalUnion:
    """A set in normal form: sorted, pairwise separated parts.

    Build through :func:`normalize`; equal sets have equal ``parts``.
    """

    parts: tuple[Interval, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __contains__(self, x) -> bool:
        return any(x in p for p in self.parts)

    @property
    def is_bounded(self) -> bool:
        return all(p.is_bounded for p in self.parts)

    @property
    def has_interior(self) -> bool:
        return any(not p.is_point for p in self.parts)

    def __add__(self, other: "IntervalUnion") -> "IntervalUnion":
        return minkowski_sum(self, other)

    def __le__(self, other: "IntervalUnion") -> bool:
        return is_subset(self, other)

    def __or__(self, other: "IntervalUnion") -> "IntervalUnion":
        return normalize(self.parts + other.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        return " u ".join(map(str, self.parts))


EMPTY = IntervalUnion()


# ---------------------------------------------------------------------------
# key encoding


def _denominator(parts: Iterable[Interval]) -> int:
    d = 1
    for p in parts:
        for v in (p.lo, p.hi):
            if isinstance(v, Fraction):
                d = math.lcm(d, v.denominator)
    return d


def _to_keys(p: Interval, d: int) -> tuple:
    s = -INF if p.lo == -INF else 3 * int(p.lo * d) + (0 if p.lo_closed else 1)
    e = INF if p.hi == INF else 3 * int(p.hi * d) - (0 if p.hi_closed else 1)
    return s, e


def _from_keys(s, e, d: int) -> Interval:
    if s == -INF:
        lo, lo_closed = -INF, False
    else:
        r = s % 3
        lo, lo_closed = Fraction((s - r) // 3, d), r == 0
    if e == INF:
        hi, hi_closed = INF, False
    else:
        r = e % 3
        hi, hi_closed = Fraction((e + (r and 1)) // 3, d), r == 0
    return Interval(lo, hi, lo_closed, hi_closed)


def _merge_keys(ranges: list[tuple]) -> list[tuple]:
    ranges.sort()
    out: list[list] = []
    for s, e in ranges:
        if out and s <= out[-1][1] + 1:
            if e > out[-1][1]:
                out[-1][1] = e
        else:
            out.append([s, e])
    return [(s, e) for s, e in out]


def _from_key_list(ranges: list[tuple], d: int) -> IntervalUnion:
    return IntervalUnion(tuple(_from_keys(s, e, d) for s, e in ranges))


def normalize(parts: Iterable[Interval]) -> IntervalUnion:
    parts = list(parts)
    if not parts:
        return EMPTY
    d = _denominator(parts)
    return _from_key_list(_merge_keys([_to_keys(p, d) for p in parts]), d)


def _add_lo(s1, s2):
    if s1 == -INF or s2 == -INF:
        return -INF
    s = s1 + s2
    return s - 1 if s % 3 == 2 else s


def _add_hi(e1, e2):
    if e1 == INF or e2 == INF:
        return INF
    e = e1 + e2
    return e + 1 if e % 3 == 1 else e


_BULK_PAIRS = 4096
_INT64_SAFE = 2**60


def _bulk_sum(ka: list[tuple], kb: list[tuple]) -> list[tuple]:
    """Pairwise key sums of finite ranges, merged, on int64 arrays."""
    sa = np.array([s for s, _ in ka], dtype=np.int64)
    ea = np.array([e for _, e in ka], dtype=np.int64)
    sb = np.array([s for s, _ in kb], dtype=np.int64)
    eb = np.array([e for _, e in kb], dtype=np.int64)
    s = np.add.outer(sa, sb).ravel()
    e = np.add.outer(ea, eb).ravel()
    s -= (s % 3 == 2)
    e += (e % 3 == 1)
    order = np.argsort(s, kind="stable")
    s, e = s[order], e[order]
    reach = np.maximum.accumulate(e)
    start = np.empty(len(s), dtype=bool)
    start[0] = True
    start[1:] = s[1:] > reach[:-1] + 1
    first = np.flatnonzero(start)
    last = np.append(first[1:] - 1, len(s) - 1)
    return list(zip(s[first].tolist(), reach[last].tolist()))


def minkowski_sum(A: IntervalUnion, B: IntervalUnion) -> IntervalUnion:
    """``{a + b : a in A, b in B}`` exactly."""
    if not A or not B:
        return EMPTY
    d = _denominator(A.parts + B.parts)
    ka = [_to_keys(p, d) for p in A.parts]
    kb = [_to_keys(p, d) for p in B.parts]
    fa = [r for r in ka if r[0] != -INF and r[1] != INF]
    fb = [r for r in kb if r[0] != -INF and r[1] != INF]
    ia = [r for r in ka if r[0] == -INF or r[1] == INF]
    ib = [r for r in kb if r[0] == -INF or r[1] == INF]
    ranges: list[tuple] = []
    big = max((abs(v) for r in fa + fb for v in r), default=0)
    if len(fa) * len(fb) >= _BULK_PAIRS and 2 * big + 2 < _INT64_SAFE:
        ranges.extend(_bulk_sum(fa, fb))
        pairs = [(r1, r2) for r1 in ia for r2 in kb] + [(r1, r2) for r1 in fa for r2 in ib]
    else:
        pairs = [(r1, r2) for r1 in ka for r2 in kb]
    ranges.extend((_add_lo(r1[0], r2[0]), _add_hi(r1[1], r2[1])) for r1, r2 in pairs)
    return _from_key_list(_merge_keys(ranges), d)


def n_fold(A: IntervalUnion, n: int) -> IntervalUnion:
    """``(n)A = A + ... + A`` with ``n`` summands."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = A
    for _ in range(n - 1):
        out = minkowski_sum(out, A)
    return out


def is_subset(A: IntervalUnion, B: IntervalUnion) -> bool:
    if not A:
        return True
    if not B:
        return False
    d = _denominator(A.parts + B.parts)
    kb = [_to_keys(p, d) for p in B.parts]
    j = 0
    for p in A.parts:
        s, e = _to_keys(p, d)
        while j < len(kb) and kb[j][1] < s:
            j += 1
        if j == len(kb) or not (kb[j][0] <= s and e <= kb[j][1]):
            return False
    return True


def is_additively_closed(A: IntervalUnion) -> bool:
    return is_subset(n_fold(A, 2), A)


def is_triple_closed(A: IntervalUnion) -> bool:
    return is_subset(n_fold(A, 3), A)


class Halfline(NamedTuple):
    t: Fraction
    certified: bool
    a: Fraction
    b: Fraction | float
    k_explicit: int


def _widest_positive_part(S: IntervalUnion) -> tuple[Fraction, Fraction | float]:
    best = None
    for p in S.parts:
        if p.is_point or p.hi <= 0:
            continue
        a = max(p.lo, Fraction(0))
        width = p.hi - a
        if best is None or width > best[0]:
            best = (width, a, p.hi)
    if best is None:
        raise UnsupportedInput("A + A contains no interval of positive numbers")
    return best[1], best[2]


def even_sum_halfline(A: IntervalUnion, k_limit: int = 100_000) -> Halfline:
    """Least ``t`` with ``(t, inf)`` inside the union of the even sums ``(2k)A``.

    Takes the widest positive interval ``(a, b)`` of ``A + A``.  Since
    ``(2k)A`` contains ``(ka, kb)`` and consecutive such intervals overlap once
    ``k > a/(b - a)``, the union contains ``(Ka, inf)`` for
    ``K = ceil(a/(b - a)) + 1``.  The even sums with ``k`` up to ``K`` are
    computed explicitly, and further ``k`` as long as ``(2k)A`` can still reach
    below ``Ka`` (sums of ``2k`` elements that are ``>= m > 0``), so ``t`` is
    exact.  Inputs with negative points are rejected.
    """
    if not A:
        raise ValueError("A must be nonempty")
    if A.parts[0].lo < 0:
        raise UnsupportedInput("inputs with negative points are not supported")
    S = minkowski_sum(A, A)
    if not S.has_interior:
        raise NoInterval("A + A has empty interior")
    a, b = _widest_positive_part(S)
    if b == INF:
        K, tail = 1, a
    else:
        K = math.ceil(a / (b - a)) + 1
        tail = K * a
    certified = b == INF or K * (b - a) > a
    if any(p.lo == 0 and not p.is_point for p in A.parts):
        # (2k)A contains (0, 2kw) for some w > 0
        return Halfline(Fraction(0), certified, a, b, 1)
    m = min(p.lo for p in A.parts if p.lo > 0 or not p.is_point)
    k_max = max(K, math.floor(tail / (2 * m)) + 1)
    if k_max > k_limit:
        raise UnsupportedInput(f"explicit union needs k up to {k_max} > {k_limit}")
    acc = S
    union = [Interval(tail, INF, False, False), *S.parts]
    for _ in range(2, k_max + 1):
        acc = minkowski_sum(acc, S)
        union.extend(acc.parts)
    U = normalize(union)
    return Halfline(U.parts[-1].lo, certified, a, b, k_max)


def odd_sums_contained(A: IntervalUnion, kmax: int) -> bool:
    """Whether ``(2k+1)A`` lies in ``A`` for every ``1 <= k <= kmax``."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    if not is_triple_closed(A):
        raise PreconditionError("A + A + A is not contained in A")
    S = minkowski_sum(A, A)
    acc = minkowski_sum(S, A)
    for k in range(1, kmax + 1):
        if k > 1:
            acc = minkowski_sum(acc, S)
        if not is_subset(acc, A):
            return False
    return True


def cantor_stage(n: int) -> IntervalUnion:
    """Stage ``n`` of the middle-thirds Cantor set: ``2**n`` closed intervals of length ``3**-n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    lefts = [Fraction(0)]
    for i in range(1, n + 1):
        step = Fraction(2, 3**i)
        lefts = [x for l in lefts for x in (l, l + step)]
    width = Fraction(1, 3**n)
    return IntervalUnion(tuple(closed(l, l + width) for l in lefts))

