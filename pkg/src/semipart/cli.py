"""Command-line front end.

Every command builds a :class:`Report` holding three renderings of the same
facts: human-readable text, line records (one fact per line, space
separated, strings JSON-quoted) and a JSON document.  Exit status is 0 on
success, 1 when a verification fails and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import classifier, groups, kappa, multiplicative as mult, sumset
from .exprs import format_atoms, parse_atoms, parse_real, parse_union
from .hamel import max_index
from .sampling import SampleConfig
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    text: list[str] = field(default_factory=list)
    records: list[list | str] = field(default_factory=list)  # str: already rendered
    data: Any = None
    status: int = EXIT_OK

    def add(self, text: str | None, *record) -> None:
        if text is not None:
            self.text.append(text)
        if record:
            self.records.append(list(record))


def _field(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "-"
    if isinstance(v, int):
        return str(v)
    return json.dumps(str(v), ensure_ascii=False)


def render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "records":
        lines = [r if isinstance(r, str) else " ".join([str(r[0]), *map(_field, r[1:])])
                 for r in rep.records]
    else:
        lines = rep.text
    return "".join(line + "\n" for line in lines)


def _inputs(values: Sequence[str]) -> list[str]:
    """Positional inputs, or non-blank stdin lines when none were given."""
    if values:
        return list(values)
    lines = [ln.strip() for ln in sys.stdin.read().splitlines()]
    out = [ln for ln in lines if ln]
    if not out:
        raise UsageError("no input given (pass arguments or lines on stdin)")
    return out


def _config(ns: argparse.Namespace) -> SampleConfig:
    try:
        return SampleConfig(seed=ns.seed, count=ns.count, max_terms=ns.max_terms,
                            max_index=ns.max_index, max_point_len=ns.max_point_len,
                            coeff_bound=ns.coeff_bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _group(ns: argparse.Namespace) -> groups.FiniteGroup:
    G = groups.FiniteGroup.parse(ns.group)
    G.check_bound(ns.group_bound)
    return G


# ---------------------------------------------------------------------------
# commands


def cmd_classify(ns) -> Report:
    rep = Report(data=[])
    for src in _inputs(ns.expr):
        lab = classifier.classify(parse_real(src))
        rep.add(str(lab), "label", src, lab.tag, lab.alpha, lab.k)
        rep.data.append({"input": src, "tag": lab.tag, "alpha": lab.alpha, "k": lab.k})
    return rep


def cmd_split(ns) -> Report:
    rep = Report(data=[])
    for src in _inputs(ns.expr):
        x = parse_real(src)
        d, e = classifier.split_below_top(x)
        alpha = max_index(x)
        rep.add(f"alpha={alpha} d={d} e={e}", "split", src, alpha, str(d), str(e))
        rep.data.append({"input": src, "alpha": alpha, "d": str(d), "e": str(e)})
    return rep


def cmd_prop11(ns) -> Report:
    kp = _parse_kappa(ns.kappa)
    rep = Report(data=[])
    for src in _inputs(ns.expr):
        lab = kappa.classify_prop11(parse_real(src), kp)
        rep.add(str(lab), "prop11", src, str(kp), lab.tag, lab.alpha)
        rep.data.append({"input": src, "kappa": kp, "tag": lab.tag, "alpha": lab.alpha})
    return rep


def _parse_kappa(text: str) -> kappa.Kappa:
    if text == kappa.ALL:
        return kappa.ALL
    try:
        return kappa.check_kappa(int(text))
    except ValueError:
        raise UsageError(f"--kappa must be a positive integer or 'all', got {text!r}") from None


def cmd_ray(ns) -> Report:
    x, y = parse_real(ns.x), parse_real(ns.y)
    same = classifier.same_ray(x, y)
    rep = Report(data={"x": str(x), "y": str(y), "same_ray": same})
    rep.add(f"same-ray {str(same).lower()}", "ray", str(x), str(y), same)
    return rep


def _union_report(kind: str, U: sumset.IntervalUnion) -> Report:
    rep = Report(data={"result": str(U), "parts": len(U)})
    rep.add(str(U), kind, str(U), len(U))
    return rep


def cmd_sumset(ns) -> Report:
    return _union_report("sumset", sumset.minkowski_sum(parse_union(ns.a), parse_union(ns.b)))


def cmd_nfold(ns) -> Report:
    if ns.n < 1:
        raise UsageError("n must be >= 1")
    return _union_report("nfold", sumset.n_fold(parse_union(ns.a), ns.n))


def cmd_halfline(ns) -> Report:
    h = sumset.even_sum_halfline(parse_union(ns.a))
    rep = Report(data={"t": str(h.t), "certified": h.certified, "a": str(h.a),
                       "b": str(h.b), "k_explicit": h.k_explicit})
    rep.add(f"t={h.t} certified={str(h.certified).lower()} k={h.k_explicit}",
            "halfline", str(h.t), h.certified, h.k_explicit)
    return rep


def cmd_closed(ns) -> Report:
    A = parse_union(ns.a)
    two, three = sumset.is_additively_closed(A), sumset.is_triple_closed(A)
    rep = Report(data={"set": str(A), "closed2": two, "closed3": three})
    rep.add(f"2-closed={str(two).lower()} 3-closed={str(three).lower()}", "closed", str(A), two, three)
    return rep


def cmd_cantor_sum(ns) -> Report:
    if ns.n < 0:
        raise UsageError("n must be >= 0")
    C = sumset.cantor_stage(ns.n)
    S = sumset.minkowski_sum(C, C)
    rep = Report(data={"n": ns.n, "stage_parts": len(C), "sum": str(S)})
    rep.add(f"stage {ns.n}: {len(C)} intervals", "cantor-stage", ns.n, len(C))
    rep.add(f"C+C = {S}", "cantor-sum", ns.n, str(S))
    return rep


def cmd_atoms(ns) -> Report:
    S = parse_atoms(ns.atoms)
    if not S:
        raise UsageError("empty atom set")
    U = mult.as_interval_union(S)
    two, three = mult.is_mult_closed(S), mult.is_triple_mult_closed(S)
    rep = Report(data={"atoms": format_atoms(S), "set": str(U), "closed2": two, "closed3": three})
    rep.add(f"{format_atoms(S)} = {U}", "atoms", format_atoms(S), str(U))
    rep.add(f"mult-closed={str(two).lower()} triple-closed={str(three).lower()}", "mult-closed", two, three)
    return rep


def cmd_enum10(ns) -> Report:
    rep = Report(data=[])
    for S in mult.enumerate_closed_generator_unions():
        names = "+".join(mult.generator_names(S))
        U = mult.as_interval_union(S)
        rep.add(f"{names}: {U}", "piece-set", names, str(U))
        rep.data.append({"generators": mult.generator_names(S), "set": str(U)})
    return rep


def cmd_multclassify(ns) -> Report:
    rep = Report(data=[])
    for src in _inputs(ns.expr):
        lab = mult.mult_classify(mult.PosRealExp(parse_real(src)))
        rep.add(str(lab), "mult-label", src, lab.tag, lab.alpha, lab.k)
        rep.data.append({"exponent": src, "tag": lab.tag, "alpha": lab.alpha, "k": lab.k})
    return rep


def cmd_subgroups(ns) -> Report:
    G = _group(ns)
    subs = groups.subgroups(G, ns.group_bound)
    rep = Report(data={"group": str(G), "subgroups": [str(H) for H in subs]})
    rep.add(f"{G}: {len(subs)} subgroups", "group", str(G), G.order, len(subs))
    for H in subs:
        rep.add(f"  order {H.order} {H}", "subgroup", H.order, str(H))
    return rep


def cmd_covers(ns) -> Report:
    G = _group(ns)
    covers = groups.find_covers(G, allow_trivial=ns.allow_trivial, bound=ns.group_bound, limit=ns.limit)
    rep = Report(data={"group": str(G), "covers": [str(c) for c in covers]})
    rep.add(f"{G}: {len(covers)} covers", "group", str(G), G.order, len(covers))
    for c in covers:
        rep.add(str(c), "cover", c.kappa, c.lam, " ".join(map(str, c.subgroups)))
    return rep


def cmd_bounds(ns) -> Report:
    G = _group(ns)
    covers = [c for c in groups.find_covers(G, bound=ns.group_bound, limit=ns.limit)]
    rep = Report(data={"group": str(G), "reports": []})
    rep.add(f"{G}: {len(covers)} covers checked", "group", str(G), G.order, len(covers))
    for c in covers:
        br = groups.verify_cover_bounds(G, c)
        rep.text.extend(br.lines())
        rep.records.append(["bounds", c.kappa, c.lam, G.order, br.ok])
        rep.data["reports"].append({"cover": str(c), "ok": br.ok, "failures": br.failures})
        if not br.ok:
            rep.status = EXIT_FAIL
    return rep


def cmd_verify(ns) -> Report:
    results = run_suites(ns.module, _config(ns), ns.group_bound)
    rep = Report(data=[])
    for r in results:
        rep.text.append(f"{r.name}: {'pass' if r.ok else 'FAIL'} "
                        f"({sum(r.counts.values())} checks, {len(r.failures)} failures)")
        rep.text.extend(f"  {f}" for f in r.failures)
        rep.records.extend(r.records())
        rep.data.append({"suite": r.name, "ok": r.ok, "counts": r.counts, "failures": r.failures})
        if not r.ok:
            rep.status = EXIT_FAIL
    return rep


COMMANDS: dict[str, Callable[[argparse.Namespace], Report]] = {
    "classify": cmd_classify, "split": cmd_split, "prop11": cmd_prop11, "ray": cmd_ray,
    "sumset": cmd_sumset, "nfold": cmd_nfold, "halfline": cmd_halfline, "closed": cmd_closed,
    "cantor-sum": cmd_cantor_sum, "atoms": cmd_atoms, "enum10": cmd_enum10,
    "multclassify": cmd_multclassify, "subgroups": cmd_subgroups, "covers": cmd_covers,
    "bounds": cmd_bounds, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semipart", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-index", type=int, default=20)
    p.add_argument("--max-terms", type=int, default=8)
    p.add_argument("--max-point-len", type=int, default=8)
    p.add_argument("--coeff-bound", type=int, default=100)
    p.add_argument("--group-bound", type=int, default=groups.DEFAULT_BOUND)
    p.add_argument("--format", choices=("text", "records", "json"), default="text")
    p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def real_cmd(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("expr", nargs="*", help="expressions like '2*b(0,) - 1/3*b(2,01)' (default: stdin)")
        return sp

    real_cmd("classify", "label of a symbolic real")
    real_cmd("split", "split into the part below the top piece and the top piece")
    real_cmd("prop11", "label in the kappa-piece partition").add_argument(
        "--kappa", default="all", help="positive integer or 'all'")
    sp = sub.add_parser("ray", help="whether y is a positive rational multiple of x")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = sub.add_parser("sumset", help="Minkowski sum of two interval unions")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = sub.add_parser("nfold", help="n-fold sum of an interval union")
    sp.add_argument("a")
    sp.add_argument("n", type=int)
    sub.add_parser("halfline", help="least t with (t,inf) inside the even sums").add_argument("a")
    sub.add_parser("closed", help="2- and 3-closure of an interval union").add_argument("a")
    sub.add_parser("cantor-sum", help="C_n + C_n for the n-th Cantor stage").add_argument("n", type=int)
    sub.add_parser("atoms", help="closure of a union of multiplicative atoms").add_argument(
        "atoms", help="comma list of nbig,none,nsmall,zero,psmall,pone,pbig")
    sub.add_parser("enum10", help="closed unions of the multiplicative generators")
    real_cmd("multclassify", "label of exp(x) in the multiplicative partition")
    sub.add_parser("subgroups", help="subgroup lattice of a finite abelian group").add_argument("group")
    for name, help in (("covers", "essentially disjoint subgroup covers"),
                       ("bounds", "check the counting inequalities on every cover")):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("group", help="e.g. Z2xZ2")
        sp.add_argument("--limit", type=int, default=None, help="stop after this many covers")
        if name == "covers":
            sp.add_argument("--allow-trivial", action="store_true", help="also list the cover {G}")
    sub.add_parser("verify", help="run a seeded property suite").add_argument(
        "module", choices=(*SUITES, "all"))
    return p


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """Parse ``argv`` and run it; returns ``(status, stdout, stderr)``."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), "", ""
    try:
        rep = COMMANDS[ns.command](ns)
    except (UsageError, ValueError) as exc:
        # ParseError, UnsupportedInput, GroupTooLarge etc. are ValueErrors
        return EXIT_USAGE, "", f"semipart {ns.command}: error: {exc}\n"
    out = render(rep, ns.format)
    if ns.output:
        with open(ns.output, "w", encoding="utf-8") as fh:
            fh.write(out)
        out = ""
    return rep.status, out, ""


def main(argv: Sequence[str] | None = None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
