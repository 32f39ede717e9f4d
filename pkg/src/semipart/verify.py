"""Seeded property suites, one per module, as run by ``semipart verify``.

Each suite returns a :class:`SuiteResult` counting the cases checked per
property and listing every failure; a suite passes when there are none.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import classifier, groups, hamel, kappa, multiplicative as mult, sumset
from .exprs import parse_real, parse_union
from .hamel import Cylinder, add, coeff_sum, make_real, scale
from .oracles import brute_force_halfline, union_product
from .sampling import (SampleConfig, random_point, random_positive_rational, random_rational,
                       random_real, random_union)
from .sumset import INF, Interval, IntervalUnion, normalize


@dataclass
class SuiteResult:
    name: str
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, prop: str, passed: bool, detail: str = "") -> None:
        self.counts[prop] = self.counts.get(prop, 0) + 1
        if not passed:
            self.failures.append(f"{prop}: {detail}")

    def records(self) -> list[str]:
        out = [f"suite {self.name} {'pass' if self.ok else 'fail'}"]
        out += [f"property {self.name} {p} {n}" for p, n in sorted(self.counts.items())]
        out += [f"failure {self.name} {f!r}" for f in self.failures]
        return out


# ---------------------------------------------------------------------------
# input families shared with the test-suite


def halfline_input(rng: random.Random) -> IntervalUnion:
    """Positive union with a part of width >= 2 reaching at least 8."""
    parts = []
    d = rng.randint(1, 4)
    lo = Fraction(rng.randint(0, 6 * d), d)
    parts.append(Interval(lo, max(lo + 2, Fraction(8)) + Fraction(rng.randint(0, 2 * d), d),
                          rng.random() < 0.5, rng.random() < 0.5))
    for _ in range(rng.randint(0, 2)):
        a = Fraction(rng.randint(1, 40), rng.randint(1, 4))
        if rng.random() < 0.4:
            parts.append(Interval(a, a))
        else:
            parts.append(Interval(a, a + Fraction(rng.randint(1, 8), rng.randint(1, 4)),
                                  rng.random() < 0.5, rng.random() < 0.5))
    return normalize(parts)


def triple_closed_input(rng: random.Random) -> IntervalUnion:
    """A union with ``A+A+A`` inside ``A``, by rejection from a floor-plus-halfline family."""
    while True:
        d = rng.randint(1, 4)
        a = Fraction(rng.randint(1, 6 * d), d)
        parts = [Interval(a, a) if rng.random() < 0.5
                 else Interval(a, a + Fraction(rng.randint(1, 3 * d), d), True, rng.random() < 0.5)]
        for _ in range(rng.randint(0, 2)):
            c = a + Fraction(rng.randint(0, 6 * d), 3 * d) * a
            parts.append(Interval(c, c + Fraction(rng.randint(0, 2 * d), d)))
        c = 3 * a - Fraction(rng.randint(0, 3 * d), 2 * d)
        parts.append(Interval(c, INF, rng.random() < 0.5, False))
        if rng.random() < 0.2:
            parts.append(Interval(0, 0))
        A = normalize(parts)
        if rng.random() < 0.5:
            A = normalize(Interval(-p.hi, -p.lo, p.hi_closed, p.lo_closed) for p in A)
        if sumset.is_triple_closed(A):
            return A


def bounded_positive_input(rng: random.Random) -> IntervalUnion:
    while True:
        A = random_union(rng, parts=4, lo=0, hi=10, denom=5)
        if 0 not in A:
            return A


# ---------------------------------------------------------------------------
# suites


def suite_hamel(cfg: SampleConfig) -> SuiteResult:
    res = SuiteResult("hamel")
    rng = random.Random(f"{cfg.seed}:verify:hamel")
    for _ in range(cfg.count):
        x, y, z = (random_real(rng, cfg) for _ in range(3))
        p, q = random_rational(rng, cfg.coeff_bound), random_rational(rng, cfg.coeff_bound)
        for r in (x, add(x, y), scale(p, x)):
            res.check("no-zero-coeff", all(c != 0 for _, c in r.items()), str(r))
        res.check("canonical-idempotent", make_real(x.items()) == x, str(x))
        res.check("commutative", add(x, y) == add(y, x), f"{x} | {y}")
        res.check("associative", add(add(x, y), z) == add(x, add(y, z)), f"{x} | {y} | {z}")
        res.check("distributive-vector", scale(p, add(x, y)) == add(scale(p, x), scale(p, y)), f"{p} {x} {y}")
        res.check("distributive-scalar", scale(p + q, x) == add(scale(p, x), scale(q, x)), f"{p} {q} {x}")
        res.check("scalar-compat", scale(p * q, x) == scale(p, scale(q, x)), f"{p} {q} {x}")
        res.check("inverse", not add(x, scale(-1, x)), str(x))
        pieces = sorted({e.piece for e in itertools.chain(x, y)}) or [0]
        for _ in range(4):
            a, k = rng.choice(pieces), rng.randint(1, 2 ** (cfg.max_point_len + 1))
            J = Cylinder(a, k)
            ok = coeff_sum(add(x, y), J) == coeff_sum(x, J) + coeff_sum(y, J)
            res.check("S-additive", ok, f"{x} | {y} | piece {a} k {k}")
        pts = sorted({random_point(rng, cfg.max_point_len) for _ in range(rng.randint(2, 5))})
        bound = hamel.lex_index_bound(pts)
        sep = any(sum(hamel.cylinder_contains(p, k) for p in pts) == 1 for k in range(1, bound + 1))
        res.check("separation", sep, str(pts))
    return res


def suite_partition(cfg: SampleConfig) -> SuiteResult:
    res = SuiteResult("partition")
    rep = classifier.verify_partition_sample(cfg)
    for kind, n in rep.checks.items():
        res.counts[kind] = n
    res.failures.extend(v.record() for v in rep.violations)
    rng = random.Random(f"{cfg.seed}:verify:partition")
    for _ in range(cfg.count):
        x = random_real(rng, cfg)
        lab = classifier.classify(x)
        res.check("scan-agrees", classifier.classify_by_scan(x) == lab, str(x))
        y = scale(random_positive_rational(rng, cfg.coeff_bound), x)
        res.check("ray", classifier.same_ray(x, y) and classifier.classify(y) == lab, f"{x} | {y}")
        if x:
            lo = random_real(rng, cfg, hi=max(lab.alpha - 1, 0)) if lab.alpha else hamel.ZERO
            res.check("lower-noise", classifier.classify(add(x, lo)) == lab, f"{x} | {lo}")
    return res


def suite_prop11(cfg: SampleConfig) -> SuiteResult:
    res = SuiteResult("prop11")
    rng = random.Random(f"{cfg.seed}:verify:prop11")
    for kp in [*range(1, 9), kappa.ALL]:
        for lab in kappa.all_labels(kp, limit=cfg.max_index + 1):
            w = kappa.witness_prop11(lab, kp)
            res.check("witness", kappa.classify_prop11(w, kp) == lab, f"kappa={kp} {lab}")
        for f in kappa.check_closure_prop11(kp, cfg.count, cfg):
            res.check("closure", False, f"kappa={kp} {f.label}: {f.x} + {f.y} -> {f.got}")
        res.counts["closure"] = res.counts.get("closure", 0) + cfg.count
    for _ in range(cfg.count):
        x = random_real(rng, cfg)
        labs = {kappa.classify_prop11(x, 1)}
        res.check("kappa-1-remainder", labs == {kappa.PropLabel.remainder()}, str(x))
    return res


def suite_sumset(cfg: SampleConfig) -> SuiteResult:
    res = SuiteResult("sumset")
    rng = random.Random(f"{cfg.seed}:verify:sumset")
    n = max(1, min(cfg.count, 300))
    for _ in range(n):
        A, B, C = (random_union(rng, unbounded_prob=0.2) for _ in range(3))
        res.check("normalize-idempotent", normalize(A.parts) == A, str(A))
        res.check("sum-commutative", A + B == B + A, f"{A} | {B}")
        res.check("sum-associative", (A + B) + C == A + (B + C), f"{A} | {B} | {C}")
        m, k = rng.randint(1, 3), rng.randint(1, 3)
        res.check("fold-additive", sumset.n_fold(A, m + k) == sumset.n_fold(A, m) + sumset.n_fold(A, k), f"{A} {m} {k}")
        res.check("round-trip", parse_union(str(A)) == A, str(A))
    for _ in range(max(1, n // 10)):
        A = halfline_input(rng)
        h = sumset.even_sum_halfline(A)
        t, _ = brute_force_halfline(A)
        res.check("halfline-brute-force", h.certified and t == h.t, f"{A}: t={h.t} brute={t}")
        T = triple_closed_input(rng)
        res.check("odd-sums", sumset.odd_sums_contained(T, 8), str(T))
        Bd = bounded_positive_input(rng)
        res.check("bounded-not-closed",
                  not sumset.is_additively_closed(Bd) and not sumset.is_triple_closed(Bd), str(Bd))
    for stage in range(0, 8):
        C = sumset.cantor_stage(stage)
        res.check("cantor-sum", C + C == normalize([sumset.closed(0, 2)]), f"n={stage}")
    return res


def suite_mult(cfg: SampleConfig) -> SuiteResult:
    res = SuiteResult("mult")
    for a in mult.ATOMS:
        for b in mult.ATOMS:
            table = mult.as_interval_union(mult.atom_product(a, b))
            oracle = union_product(normalize([a.interval]), normalize([b.interval]))
            res.check("table-vs-oracle", table == oracle, f"{a.value}*{b.value}: {table} vs {oracle}")
            res.check("commutative", mult.atom_product(a, b) == mult.atom_product(b, a), f"{a} {b}")
    listed = mult.enumerate_closed_generator_unions()
    res.check("enum-size", len(listed) == 10, str(len(listed)))
    for mask in range(16):
        S = mult.generator_union(mask)
        expect = bool(mask & 3) and mult.is_mult_closed(S)
        res.check("enum-sound", (S in listed) == expect, mult.generator_names(S))
    rng = random.Random(f"{cfg.seed}:verify:mult")
    for _ in range(cfg.count):
        u = mult.PosRealExp(random_real(rng, cfg))
        v = mult.PosRealExp(random_real(rng, cfg))
        res.check("bridge", mult.mult_classify(u * v) == classifier.classify(add(u.exponent, v.exponent)), f"{u} {v}")
        res.check("inverse", mult.mult_classify(u.inverse()) == mult.mult_classify(u).negated(), str(u))
    return res


def suite_groups(cfg: SampleConfig, bound: int = groups.DEFAULT_BOUND) -> SuiteResult:
    res = SuiteResult("groups")
    names = ["Z2", "Z3", "Z5", "Z7", "Z11", "Z13", "Z4", "Z6", "Z8", "Z2xZ2", "Z3xZ3",
             "Z5xZ5", "Z2xZ2xZ2", "Z2xZ4", "Z3xZ3xZ3", "Z2xZ2xZ2xZ2"]
    for name in names:
        G = groups.FiniteGroup.parse(name)
        if G.order > bound:
            continue
        for H in groups.subgroups(G, bound):
            res.check("lagrange", G.order % H.order == 0, f"{G} {H}")
        for c in groups.find_covers(G, bound=bound):
            rep = groups.verify_cover_bounds(G, c)
            res.check("cover-bounds", rep.ok, f"{G} {c}: {rep.failures}")
    return res


def suite_cli(cfg: SampleConfig) -> SuiteResult:
    res = SuiteResult("cli")
    rng = random.Random(f"{cfg.seed}:verify:cli")
    for _ in range(cfg.count):
        x = random_real(rng, cfg)
        res.check("real-round-trip", parse_real(str(x)) == x, str(x))
    return res


SUITES: dict[str, Callable[[SampleConfig], SuiteResult]] = {
    "hamel": suite_hamel,
    "partition": suite_partition,
    "prop11": suite_prop11,
    "sumset": suite_sumset,
    "mult": suite_mult,
    "groups": suite_groups,
    "cli": suite_cli,
}


def run_suites(name: str, cfg: SampleConfig, group_bound: int = groups.DEFAULT_BOUND) -> list[SuiteResult]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(name)
    out = []
    for n in names:
        if n == "groups":
            out.append(suite_groups(cfg, group_bound))
        else:
            out.append(SUITES[n](cfg))
    return out
