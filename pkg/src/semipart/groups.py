"""Essentially disjoint subgroup covers of finite abelian groups.

Groups are products ``Z_m1 x ... x Z_mr``.  Elements are numbered in
lexicographic order of their coordinate tuples and subgroups are stored as
bitmasks over that numbering.  An essentially disjoint cover by nontrivial
subgroups is the same thing as a partition of ``G \\ {e}`` into sets
``H \\ {e}``, so covers are found with an exact-cover backtracking search.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

DEFAULT_BOUND = 64

Element = tuple[int, ...]


class GroupTooLarge(ValueError):
    pass


class InvalidCover(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(int(m) for m in self.factors))
        if not self.factors:
            raise ValueError("a group needs at least one cyclic factor")
        if any(m < 2 for m in self.factors):
            raise ValueError(f"cyclic factors must be >= 2, got {self.factors}")

    @classmethod
    def parse(cls, text: str) -> "FiniteGroup":
        """Parse ``Z2xZ2``, ``Z3 x Z3 x Z3``, ``Z6``."""
        s = text.replace(" ", "")
        if not re.fullmatch(r"Z\d+(xZ\d+)*", s):
            raise ValueError(f"bad group syntax {text!r}; expected e.g. Z2xZ2")
        return cls(tuple(int(m) for m in s[1:].split("xZ")))

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.factors)

    def check_bound(self, bound: int = DEFAULT_BOUND) -> None:
        if self.order > bound:
            raise GroupTooLarge(f"|{self}| = {self.order} exceeds the bound {bound}")

    @cached_property
    def elements(self) -> list[Element]:
        return list(itertools.product(*(range(m) for m in self.factors)))

    @cached_property
    def index(self) -> dict[Element, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def identity(self) -> Element:
        return (0,) * len(self.factors)

    def add(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.factors))

    def neg(self, g: Element) -> Element:
        return tuple(-a % m for a, m in zip(g, self.factors))

    @cached_property
    def _shift(self) -> list[list[int]]:
        # _shift[c][i] = index of elements[i] + elements[c]
        els, idx = self.elements, self.index
        return [[idx[self.add(g, c)] for g in els] for c in els]

    def translate(self, mask: int, c: int) -> int:
        row = self._shift[c]
        out = 0
        for i in _bits(mask):
            out |= 1 << row[i]
        return out

    def mask_of(self, elements) -> int:
        out = 0
        for g in elements:
            out |= 1 << self.index[tuple(g)]
        return out

    def elements_of(self, mask: int) -> tuple[Element, ...]:
        return tuple(self.elements[i] for i in _bits(mask))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGroup
    mask: int = field(repr=False)

    def __post_init__(self) -> None:
        G, m = self.group, self.mask
        if not m & 1:
            raise ValueError("subgroup must contain the identity")
        for i in _bits(m):
            if G.translate(m, i) != m:
                raise ValueError("not closed under the group operation")

    @classmethod
    def from_elements(cls, group: FiniteGroup, elements) -> "Subgroup":
        return cls(group, group.mask_of(elements))

    @property
    def elements(self) -> tuple[Element, ...]:
        return self.group.elements_of(self.mask)

    @property
    def order(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, g) -> bool:
        return bool(self.mask >> self.group.index[tuple(g)] & 1)

    def __len__(self) -> int:
        return self.order

    def sort_key(self) -> tuple:
        return (self.order, self.elements)

    def generators(self) -> list[Element]:
        """Greedy generating set: scan elements in order, keep those outside the span so far."""
        G = self.group
        span = 1
        gens = []
        for i in _bits(self.mask):
            if not span >> i & 1:
                gens.append(G.elements[i])
                span = _join(G, span, _cyclic(G, i))
        return gens

    def __str__(self) -> str:
        gens = self.generators()
        if not gens:
            return "<>"
        return "<" + ", ".join("(" + ",".join(map(str, g)) + ")" for g in gens) + ">"


def _cyclic(G: FiniteGroup, i: int) -> int:
    mask, j = 1, i
    while j != 0:
        mask |= 1 << j
        j = G._shift[i][j]
    return mask


def _join(G: FiniteGroup, h: int, c: int) -> int:
    out = 0
    for j in _bits(c):
        out |= G.translate(h, j)
    return out


@lru_cache(maxsize=64)
def _subgroup_masks(G: FiniteGroup) -> tuple[int, ...]:
    cyclics = sorted({_cyclic(G, i) for i in range(G.order)})
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclics:
                if c & ~h:
                    j = _join(G, h, c)
                    if j not in seen:
                        seen.add(j)
                        nxt.append(j)
        frontier = nxt
    return tuple(seen)


def subgroups(G: FiniteGroup, bound: int = DEFAULT_BOUND) -> list[Subgroup]:
    """All subgroups, sorted by (order, element list)."""
    G.check_bound(bound)
    subs = [Subgroup(G, m) for m in _subgroup_masks(G)]
    return sorted(subs, key=Subgroup.sort_key)


def is_essentially_disjoint(cover: Sequence[Subgroup]) -> bool:
    groups = {H.group for H in cover}
    if len(groups) > 1:
        raise ValueError("subgroups of different groups")
    return all(a.mask & b.mask == 1 for a, b in itertools.combinations(cover, 2))


@dataclass(frozen=True)
class SubgroupCover:
    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]

    def __post_init__(self) -> None:
        full = (1 << self.group.order) - 1
        union = 0
        for H in self.subgroups:
            if H.group != self.group:
                raise InvalidCover("subgroup of another group")
            union |= H.mask
        if union != full:
            raise InvalidCover("subgroups do not cover the group")
        if not is_essentially_disjoint(self.subgroups):
            raise InvalidCover("subgroups are not essentially disjoint")

    @property
    def kappa(self) -> int:
        return len(self.subgroups)

    @property
    def lam(self) -> int:
        return max(H.order for H in self.subgroups)

    def __str__(self) -> str:
        return f"kappa={self.kappa} " + " ".join(map(str, self.subgroups))


def iter_covers(G: FiniteGroup, bound: int = DEFAULT_BOUND) -> Iterator[SubgroupCover]:
    """Essentially disjoint covers by proper nontrivial subgroups, in search order.

    Branches on the uncovered element with the fewest fitting subgroups
    (Knuth's Algorithm X heuristic); candidates are tried in canonical order.
    """
    subs = [H for H in subgroups(G, bound) if 1 < H.order < G.order]
    rows = [H.mask & ~1 for H in subs]
    cand = [[r for r, m in enumerate(rows) if m >> i & 1] for i in range(G.order)]
    full = ((1 << G.order) - 1) & ~1

    def search(left: int, chosen: list[int]) -> Iterator[list[int]]:
        if not left:
            yield list(chosen)
            return
        best = None
        for i in _bits(left):
            fit = [r for r in cand[i] if rows[r] & ~left == 0]
            if best is None or len(fit) < len(best):
                best = fit
                if not fit:
                    return
        for r in best:
            chosen.append(r)
            yield from search(left & ~rows[r], chosen)
            chosen.pop()

    for sol in search(full, []):
        yield SubgroupCover(G, tuple(subs[r] for r in sorted(sol)))


def cover_key(c: SubgroupCover) -> tuple:
    return (c.kappa, tuple(H.sort_key() for H in c.subgroups))


def find_covers(G: FiniteGroup, allow_trivial: bool = False, bound: int = DEFAULT_BOUND,
                limit: int | None = None) -> list[SubgroupCover]:
    """All inclusion-minimal essentially disjoint covers with ``kappa >= 2``.

    Sorted by ``kappa``, then by the canonical subgroup lists.  In such a
    cover every nonidentity element lies in exactly one subgroup, so the
    minimal ones are exactly those without the trivial subgroup.  With
    ``allow_trivial`` the cover ``{G}`` is listed first.  ``limit`` stops the
    search after that many covers (the result is then not exhaustive).
    """
    G.check_bound(bound)
    found = list(itertools.islice(iter_covers(G, bound), limit))
    found.sort(key=cover_key)
    if allow_trivial:
        full = Subgroup(G, (1 << G.order) - 1)
        found.insert(0, SubgroupCover(G, (full,)))
    return found


@dataclass
class BoundReport:
    group: FiniteGroup
    kappa: int
    lam: int
    # (alpha, g, beta, size) for the largest |g H_alpha & H_beta| seen
    max_coset_meet: tuple[int, Element, int, int]
    cosets_checked: int
    coset_meets_ok: bool
    cosets_covered_ok: bool
    kappa_ge_each: bool
    kappa_lambda_ge_order: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.coset_meets_ok and self.cosets_covered_ok
                and self.kappa_ge_each and self.kappa_lambda_ge_order)

    def lines(self) -> list[str]:
        a, g, b, n = self.max_coset_meet
        return [
            f"group {self.group} order={self.group.order} kappa={self.kappa} lambda={self.lam}",
            f"coset-meet max={n} alpha={a} g=({','.join(map(str, g))}) beta={b} "
            f"checked={self.cosets_checked} ok={str(self.coset_meets_ok).lower()}",
            f"coset-covered ok={str(self.cosets_covered_ok).lower()}",
            f"kappa>=|H| ok={str(self.kappa_ge_each).lower()}",
            f"kappa*lambda>=|G| {self.kappa}*{self.lam}>={self.group.order} "
            f"ok={str(self.kappa_lambda_ge_order).lower()}",
        ] + [f"failure {f}" for f in self.failures]


def verify_cover_bounds(G: FiniteGroup, cover: SubgroupCover) -> BoundReport:
    """Check the counting inequalities of a cover with ``kappa >= 2``.

    For every ``H_a`` and every ``g`` outside it, the coset ``g + H_a`` meets
    each other ``H_b`` in at most one element and is covered by them; hence
    ``kappa >= |H_a|``, and since the ``H_a`` cover ``G``, ``kappa*lambda >= |G|``
    with ``lambda`` the largest subgroup order.

    The largest meet ``|(g + H_a) & H_b|`` over all ``g`` is the largest
    number of elements of ``H_b`` sharing one coset of ``H_a``, and all
    cosets ``g + H_a`` with ``g`` outside ``H_a`` are covered exactly when
    ``G - H_a`` is.
    """
    if cover.group != G:
        raise InvalidCover("cover belongs to another group")
    k = cover.kappa
    if k < 2:
        raise InvalidCover("kappa = 1 makes the bounds vacuous")
    subs = cover.subgroups
    full = (1 << G.order) - 1
    failures = []
    worst = (0, G.identity, 0, -1)
    checked = 0
    meets_ok = covered_ok = True
    for a, H in enumerate(subs):
        checked += G.order // H.order - 1
        coset_of = {}
        rest = 0
        for b, K in enumerate(subs):
            if b == a:
                continue
            rest |= K.mask
            seen: dict[int, int] = {}
            for y in _bits(K.mask):
                c = coset_of.get(y)
                if c is None:
                    c = coset_of[y] = G.translate(H.mask, y)
                if c != H.mask:  # only cosets g + H_a with g outside H_a
                    seen[c] = seen.get(c, 0) + 1
            if not seen:
                continue
            c, n = max(seen.items(), key=lambda kv: kv[1])
            if n > worst[3]:
                worst = (a, G.elements[(c & -c).bit_length() - 1], b, n)
            if n > 1:
                meets_ok = False
                g = G.elements[(c & -c).bit_length() - 1]
                failures.append(f"|g+H{a} & H{b}|={n} for g={g}")
        missed = full & ~H.mask & ~rest
        if missed:
            covered_ok = False
            g = G.elements[(missed & -missed).bit_length() - 1]
            failures.append(f"g+H{a} not covered by the others for g={g}")
    ge_each = all(k >= H.order for H in subs)
    if not ge_each:
        failures.append(f"kappa={k} < max|H|={cover.lam}")
    prod_ok = k * cover.lam >= G.order
    if not prod_ok:
        failures.append(f"kappa*lambda={k * cover.lam} < |G|={G.order}")
    return BoundReport(G, k, cover.lam, worst, checked, meets_ok, covered_ok, ge_each, prod_ok, failures)


def abelian_groups(max_order: int) -> list[FiniteGroup]:
    """One representative ``Z_d1 x ... x Z_dr`` (``d1 | d2 | ...``) per abelian group of order ``2..max_order``."""
    out = []

    def chains(n: int, first: int) -> Iterator[tuple[int, ...]]:
        # invariant factors d1 | d2 | ... with product n, d1 >= 2 and first | d1
        if n == 1:
            yield ()
            return
        for d in range(max(first, 2), n + 1):
            if n % d == 0 and d % first == 0:
                rest = n // d
                if rest == 1 or rest % d == 0:
                    for tail in chains(rest, d):
                        yield (d,) + tail

    for n in range(2, max_order + 1):
        for c in chains(n, 1):
            if c and all(x >= 2 for x in c):
                out.append(FiniteGroup(c))
    return out
