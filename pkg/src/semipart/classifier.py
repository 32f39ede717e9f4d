"""Partition of the symbolic reals into additive semigroups ``A+(a,k)``, ``A-(a,k)`` and ``{0}``.

A nonzero real ``x`` is labelled by the largest piece ``a`` on which it has a
coefficient and by the first cylinder ``k`` of that piece (in the fixed
length-lex enumeration) whose coefficient sum is nonzero; the sign of that
sum decides between ``Pos`` and ``Neg``.  Coefficient sums are additive and
lower pieces never touch the sums on piece ``a``, which is what makes every
label class closed under addition.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .hamel import (
    Cylinder,
    HamelReal,
    UndefinedForZero,
    add,
    coeff_sum,
    cylinder_index,
    lex_index_bound,
    make_real,
    max_index,
    scale,
)
from .sampling import (
    SampleConfig,
    random_lower_noise,
    random_positive_rational,
    random_nonzero_real,
    random_real,
    stream,
)

ZERO_TAG, POS, NEG = "Zero", "Pos", "Neg"


class InternalDefect(RuntimeError):
    """No separating cylinder was found within the certified bound."""


@dataclass(frozen=True)
class Label:
    tag: str
    alpha: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.tag == ZERO_TAG:
            if self.alpha is not None or self.k is not None:
                raise ValueError("Zero label carries no (alpha, k)")
        elif self.tag in (POS, NEG):
            if self.alpha is None or self.alpha < 0 or self.k is None or self.k < 1:
                raise ValueError(f"bad label parameters alpha={self.alpha} k={self.k}")
        else:
            raise ValueError(f"unknown label tag {self.tag!r}")

    @classmethod
    def zero(cls) -> "Label":
        return cls(ZERO_TAG)

    @classmethod
    def pos(cls, alpha: int, k: int) -> "Label":
        return cls(POS, alpha, k)

    @classmethod
    def neg(cls, alpha: int, k: int) -> "Label":
        return cls(NEG, alpha, k)

    @property
    def is_zero(self) -> bool:
        return self.tag == ZERO_TAG

    def negated(self) -> "Label":
        if self.is_zero:
            return self
        return Label(NEG if self.tag == POS else POS, self.alpha, self.k)

    def sort_key(self) -> tuple:
        return ({ZERO_TAG: 0, POS: 1, NEG: 2}[self.tag], self.alpha or 0, self.k or 0)

    def __str__(self) -> str:
        if self.is_zero:
            return ZERO_TAG
        return f"{self.tag} alpha={self.alpha} k={self.k}"


ZERO_LABEL = Label.zero()


def classify(x: HamelReal) -> Label:
    """Label of ``x``.

    Scans cylinder lengths ``0, 1, ...``; at each length the nonzero
    coefficient sums are collected and the lexicographically first one is
    the least cylinder index of that length.  At the length of the longest
    top-piece point the padded points are distinct, so the scan ends there.
    """
    if not x:
        return ZERO_LABEL
    alpha, top = -1, []
    for e, c in x._terms.items():
        if e.piece > alpha:
            alpha, top = e.piece, [(e.point, c)]
        elif e.piece == alpha:
            top.append((e.point, c))
    total = sum(c for _, c in top)
    if total:  # the full piece is cylinder 1
        return Label(POS if total > 0 else NEG, alpha, 1)
    longest = max(len(p) for p, _ in top)
    for n in range(1, longest + 1):
        sums: dict[str, Fraction] = {}
        for p, c in top:
            t = p[:n] if len(p) >= n else p + "0" * (n - len(p))
            sums[t] = sums.get(t, 0) + c
        hits = [t for t, s in sums.items() if s]
        if hits:
            t = min(hits)
            k = cylinder_index(t)
            return Label(POS if sums[t] > 0 else NEG, alpha, k)
    raise InternalDefect(f"no separating cylinder for {x}")


def classify_by_scan(x: HamelReal) -> Label:
    """Reference classifier: literal scan ``k = 1, 2, ...`` of cylinder sums.

    Slow, but a direct reading of the definition; the scan stops at
    :func:`~semipart.hamel.lex_index_bound` of the top-piece points.
    """
    if not x:
        return ZERO_LABEL
    alpha = max_index(x)
    bound = lex_index_bound(e.point for e in x if e.piece == alpha)
    for k in range(1, bound + 1):
        s = coeff_sum(x, Cylinder(alpha, k))
        if s:
            return Label(POS if s > 0 else NEG, alpha, k)
    raise InternalDefect(f"scan exceeded bound {bound} for {x}")


def split_below_top(x: HamelReal) -> tuple[HamelReal, HamelReal]:
    """Split ``x`` into the part below its top piece and the top-piece part."""
    if not x:
        raise UndefinedForZero("split of 0 is undefined")
    alpha = max_index(x)
    lower = {e: c for e, c in x._terms.items() if e.piece < alpha}
    top = {e: c for e, c in x._terms.items() if e.piece == alpha}
    return HamelReal._raw(lower), HamelReal._raw(top)


def same_ray(x: HamelReal, y: HamelReal) -> bool:
    """True iff ``x = y = 0`` or ``y = q*x`` for a positive rational ``q``."""
    if not x or not y:
        return not x and not y
    if x._terms.keys() != y._terms.keys():
        return False
    ratio = None
    for e, c in x._terms.items():
        r = y._terms[e] / c
        if ratio is None:
            if r <= 0:
                return False
            ratio = r
        elif r != ratio:
            return False
    return True


# ---------------------------------------------------------------------------
# verification harness


@dataclass(frozen=True)
class Violation:
    kind: str
    x: HamelReal
    y: HamelReal | None
    expected: str
    got: str

    def record(self) -> str:
        y = str(self.y) if self.y is not None else "-"
        return "violation {} {} {} {} {}".format(
            self.kind, json.dumps(str(self.x)), json.dumps(y),
            json.dumps(self.expected), json.dumps(self.got),
        )


@dataclass
class Report:
    label_counts: Counter = field(default_factory=Counter)
    checks: Counter = field(default_factory=Counter)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "Report") -> "Report":
        self.label_counts.update(other.label_counts)
        self.checks.update(other.checks)
        self.violations.extend(other.violations)
        return self

    def check(self, kind: str, passed: bool, x, y, expected, got) -> None:
        self.checks[kind] += 1
        if not passed:
            self.violations.append(Violation(kind, x, y, str(expected), str(got)))

    def records(self) -> list[str]:
        out = []
        for lab in sorted(self.label_counts, key=Label.sort_key):
            a = "-" if lab.alpha is None else lab.alpha
            k = "-" if lab.k is None else lab.k
            out.append(f"label-count {lab.tag} {a} {k} {self.label_counts[lab]}")
        for kind in sorted(self.checks):
            out.append(f"check {kind} {self.checks[kind]}")
        out.extend(v.record() for v in self.violations)
        return out

    def as_dict(self) -> dict:
        return {
            "label_counts": [
                {"tag": lab.tag, "alpha": lab.alpha, "k": lab.k, "n": self.label_counts[lab]}
                for lab in sorted(self.label_counts, key=Label.sort_key)
            ],
            "checks": dict(sorted(self.checks.items())),
            "violations": [
                {"kind": v.kind, "x": str(v.x), "y": None if v.y is None else str(v.y),
                 "expected": v.expected, "got": v.got}
                for v in self.violations
            ],
        }


def same_label_partner(x: HamelReal, rng, cfg: SampleConfig) -> HamelReal:
    """``q*x + d`` with ``q > 0`` and ``d`` supported strictly below the top piece of ``x``."""
    q = random_positive_rational(rng, cfg.coeff_bound)
    d = random_lower_noise(rng, cfg, max_index(x))
    return add(scale(q, x), d)


def check_totality(cfg: SampleConfig) -> Report:
    rng = stream(cfg, "totality")
    rep = Report()
    for _ in range(cfg.count):
        x = random_real(rng, cfg)
        try:
            lab = classify(x)
        except InternalDefect as exc:
            rep.check("totality", False, x, None, "a label", f"defect: {exc}")
            continue
        rep.label_counts[lab] += 1
        rep.check("totality", lab.is_zero == (not x), x, None,
                  "Zero" if not x else "Pos/Neg", lab)
        again = classify(make_real(x.items()))
        rep.check("determinism", again == lab, x, None, lab, again)
    return rep


def check_closure(cfg: SampleConfig) -> Report:
    rng = stream(cfg, "closure")
    rep = Report()
    for _ in range(cfg.count):
        x = random_nonzero_real(rng, cfg)
        lab = classify(x)
        y = same_label_partner(x, rng, cfg)
        ly = classify(y)
        rep.check("sampler", ly == lab, x, y, lab, ly)
        if ly != lab:
            continue
        got = classify(add(x, y))
        rep.check("closure", got == lab, x, y, lab, got)
    return rep


def check_homogeneity(cfg: SampleConfig) -> Report:
    rng = stream(cfg, "homogeneity")
    rep = Report()
    for _ in range(cfg.count):
        x = random_real(rng, cfg)
        q = random_positive_rational(rng, cfg.coeff_bound)
        lab = classify(x)
        qx = scale(q, x)
        got = classify(qx)
        rep.check("homogeneity", got == lab, x, qx, lab, got)
    return rep


def check_duality(cfg: SampleConfig) -> Report:
    rng = stream(cfg, "duality")
    rep = Report()
    for _ in range(cfg.count):
        x = random_real(rng, cfg)
        lab = classify(x)
        got = classify(scale(-1, x))
        rep.check("duality", got == lab.negated(), x, None, lab.negated(), got)
    return rep


def check_split(cfg: SampleConfig) -> Report:
    """``x = d + e`` with ``d`` below the top piece and ``e`` carrying the label's sums."""
    rng = stream(cfg, "split")
    rep = Report()
    for _ in range(cfg.count):
        x = random_nonzero_real(rng, cfg)
        lab = classify(x)
        d, e = split_below_top(x)
        ok = add(d, e) == x
        ok = ok and all(b.piece < lab.alpha for b in d)
        ok = ok and bool(e) and all(b.piece == lab.alpha for b in e)
        sums = [coeff_sum(e, Cylinder(lab.alpha, i)) for i in range(1, lab.k + 1)]
        ok = ok and not any(sums[:-1]) and (sums[-1] > 0) == (lab.tag == POS) and sums[-1] != 0
        rep.check("split", ok, x, e, lab, classify(e))
    return rep


CHECKS: dict[str, Callable[[SampleConfig], Report]] = {
    "totality": check_totality,
    "closure": check_closure,
    "homogeneity": check_homogeneity,
    "duality": check_duality,
    "split": check_split,
}


def verify_partition_sample(cfg: SampleConfig) -> Report:
    """Run every sampled check with ``cfg.count`` cases each.

    Label counts come from the totality stream only, so each sampled ``x``
    is counted once.
    """
    rep = Report()
    for name in ("totality", "closure", "homogeneity", "duality", "split"):
        rep.merge(CHECKS[name](cfg))
    return rep
