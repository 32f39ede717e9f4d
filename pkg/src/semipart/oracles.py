"""Independent reference computations used to cross-check the main routines.

None of these share code paths with what they check beyond the interval
representation itself: products of intervals are computed by splitting at
zero and multiplying magnitudes, and the even-sum halfline is read off a
brute-force union instead of the overlap certificate.
"""

from __future__ import annotations

from fractions import Fraction

from .sumset import INF, EMPTY, Interval, IntervalUnion, minkowski_sum, normalize


def _signed_parts(I: Interval):
    """``(sign, magnitude interval)`` pieces of ``I`` off zero, and whether ``0 in I``."""
    out = []
    if I.lo < 0:
        hi, hi_closed = (I.hi, I.hi_closed) if I.hi < 0 else (Fraction(0), False)
        out.append((-1, -hi, -I.lo, hi_closed, I.lo_closed))
    if I.hi > 0:
        lo, lo_closed = (I.lo, I.lo_closed) if I.lo > 0 else (Fraction(0), False)
        out.append((1, lo, I.hi, lo_closed, I.hi_closed))
    return out, 0 in I


def interval_product(I: Interval, J: Interval) -> IntervalUnion:
    """Exact ``{x*y : x in I, y in J}``."""
    parts: list[Interval] = []
    pi, zi = _signed_parts(I)
    pj, zj = _signed_parts(J)
    if zi or zj:
        parts.append(Interval(0, 0))
    for s1, l1, h1, lc1, hc1 in pi:
        for s2, l2, h2, lc2, hc2 in pj:
            lo, lo_closed = l1 * l2, lc1 and lc2
            if h1 == INF or h2 == INF:
                hi, hi_closed = INF, False
            else:
                hi, hi_closed = h1 * h2, hc1 and hc2
            if s1 * s2 > 0:
                parts.append(Interval(lo, hi, lo_closed, hi_closed))
            else:
                parts.append(Interval(-hi, -lo, hi_closed, lo_closed))
    return normalize(parts)


def union_product(A: IntervalUnion, B: IntervalUnion) -> IntervalUnion:
    return normalize(p for I in A for J in B for p in interval_product(I, J))


def even_sums_union(A: IntervalUnion, kmax: int = 50) -> IntervalUnion:
    """``(2)A u (4)A u ... u (2*kmax)A``."""
    S = minkowski_sum(A, A)
    acc, parts = S, list(S.parts)
    for _ in range(2, kmax + 1):
        acc = minkowski_sum(acc, S)
        parts.extend(acc.parts)
    return normalize(parts) if parts else EMPTY


def brute_force_halfline(A: IntervalUnion, kmax: int = 50) -> tuple[Fraction, IntervalUnion]:
    """Left end of the longest component of the truncated even-sum union.

    Stray sums (isolated points, short gaps far out) are shorter than the
    truncated halfline once ``kmax`` is large compared with the point at
    which the union closes up.
    """
    U = even_sums_union(A, kmax)
    longest = max(U.parts, key=lambda p: (p.hi - p.lo, p.hi))
    return longest.lo, U
