"""Text syntax for symbolic reals, interval unions and atom sets.

Reals::

    real     := term (('+' | '-') term)* | '0'
    term     := rational '*' 'b(' nat ',' bits ')'
    rational := ['-'] int ['/' posint]

e.g. ``2*b(0,) - 1/3*b(2,01)``.  Interval unions are ``(lo,hi)``, ``[lo,hi]``
or half-open mixes joined by ``u``, with ``inf``/``-inf`` endpoints and
``{}`` for the empty set, e.g. ``[0,1/3] u [2/3,1]``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .hamel import BasisElement, HamelReal, NonCanonicalPoint, make_real
from .multiplicative import Atom, PieceSet
from .sumset import INF, Interval, IntervalUnion, normalize


class ParseError(ValueError):
    def __init__(self, msg: str, src: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {src[:pos]}<here>{src[pos:]}")
        self.msg = msg
        self.src = src
        self.pos = pos


class _Scanner:
    """Hand-rolled cursor over the source; each method consumes or raises."""

    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.src)

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.src, self.pos)

    def expect(self, lit: str) -> None:
        self.skip_ws()
        if not self.src.startswith(lit, self.pos):
            raise self.error(f"expected {lit!r}")
        self.pos += len(lit)

    def accept(self, lit: str) -> bool:
        self.skip_ws()
        if self.src.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def nat(self) -> int:
        self.skip_ws()
        m = re.compile(r"\d+").match(self.src, self.pos)
        if not m:
            raise self.error("expected a natural number")
        self.pos = m.end()
        return int(m.group())

    def bits(self) -> str:
        m = re.compile(r"[01]*").match(self.src, self.pos)
        self.pos = m.end()
        return m.group()

    def rational(self, allow_sign: bool = True) -> Fraction:
        neg = allow_sign and self.accept("-")
        num = self.nat()
        den = 1
        if self.accept("/"):
            start = self.pos
            den = self.nat()
            if den == 0:
                self.pos = start
                raise self.error("zero denominator")
        q = Fraction(num, den)
        return -q if neg else q

    def endpoint(self):
        if self.accept("-inf"):
            return -INF
        if self.accept("+inf") or self.accept("inf"):
            return INF
        return self.rational()


def parse_real(src: str) -> HamelReal:
    s = _Scanner(src)
    if s.at_end():
        raise s.error("empty expression")
    save = s.pos
    if s.accept("0") and s.at_end():
        return make_real([])
    s.pos = save
    pairs: list[tuple[BasisElement, Fraction]] = []
    sign = 1
    while True:
        q = s.rational(allow_sign=not pairs)
        s.expect("*")
        s.expect("b(")
        piece = s.nat()
        s.expect(",")
        s.skip_ws()
        bits_at = s.pos
        bits = s.bits()
        s.expect(")")
        try:
            e = BasisElement(piece, bits)
        except NonCanonicalPoint:
            raise ParseError(f"non-canonical point {bits!r}", src, bits_at) from None
        pairs.append((e, sign * q))
        if s.at_end():
            break
        if s.accept("+"):
            sign = 1
        elif s.accept("-"):
            sign = -1
        else:
            raise s.error("expected '+' or '-'")
    return make_real(pairs)


def format_real(x: HamelReal) -> str:
    return str(x)


def _parse_interval(s: _Scanner) -> Interval:
    if s.accept("["):
        lo_closed = True
    elif s.accept("("):
        lo_closed = False
    else:
        raise s.error("expected '(' or '['")
    lo = s.endpoint()
    s.expect(",")
    hi = s.endpoint()
    if s.accept("]"):
        hi_closed = True
    elif s.accept(")"):
        hi_closed = False
    else:
        raise s.error("expected ')' or ']'")
    try:
        return Interval(lo, hi, lo_closed, hi_closed)
    except ValueError as exc:
        raise s.error(str(exc)) from None


def parse_union(src: str) -> IntervalUnion:
    s = _Scanner(src)
    if s.accept("{}") or s.accept("empty"):
        if not s.at_end():
            raise s.error("trailing input")
        return IntervalUnion()
    parts = [_parse_interval(s)]
    while not s.at_end():
        s.expect("u")
        parts.append(_parse_interval(s))
    return normalize(parts)


def format_union(A: IntervalUnion) -> str:
    return str(A)


def parse_atoms(src: str) -> PieceSet:
    names = [n for n in src.replace(" ", "").split(",") if n]
    return frozenset(Atom.from_name(n) for n in names)


def format_atoms(S) -> str:
    return ",".join(a.value for a in Atom if a in S)
