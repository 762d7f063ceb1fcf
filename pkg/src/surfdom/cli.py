"""Command line entry point: ``surfdom <subcommand> ...``.

Exit codes: 0 when nothing was violated, 1 when a violation was found, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import SurfaceOptions
from .bondage import BondageKind, bondage, check_bondage_upper_bounds
from .corpus import CONSTRAINTS, CorpusError, CorpusSpec
from .families import FamilyError, FamilySpec, generate, validate_family
from .graph import GraphError
from .invariants import BudgetExceeded, NotApplicable, ParameterKind, solve
from .io import FORMATS, read_graph, serialize_graph
from .surfaces import (
    CEILINGS,
    BoundContext,
    SurfaceError,
    SurfaceSpec,
    as_json_number,
    average_degree_ceiling,
    display,
    theorem_bound,
)
from .verify import build_report, dump_report, split_ids, sweep, to_csv, verify_all


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=10**7, help="max candidates examined per search")
    p.add_argument("--cap", type=int, default=None, help="max edge-subset size in bondage searches")


def _surface_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--chi", type=int, help="Euler characteristic of a surface the graph 2-cell embeds on")
    p.add_argument("--orientable-genus", type=int)
    p.add_argument("--nonorientable-genus", type=int)
    p.add_argument("--genus-from-bounds", action="store_true",
                   help="fill genus from cycle-rank embedding bounds (sound but weaker)")


def _surface_opts(a) -> SurfaceOptions:
    return SurfaceOptions(a.chi, a.orientable_genus, a.nonorientable_genus, a.genus_from_bounds)


def _ids(a) -> tuple[list[str] | None, list[str] | None]:
    if not a.theorem:
        return None, None
    try:
        return split_ids(a.theorem)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _write_extras(a, results, summary) -> None:
    if a.csv:
        Path(a.csv).write_text(to_csv(results))
    if a.figure:
        from .plotting import slack_figure, status_figure

        slack_figure(results, a.figure)
        status_figure(summary, Path(a.figure).with_name(Path(a.figure).stem + "_status.png"))


# -- subcommands -----------------------------------------------------------


def cmd_gen_family(a) -> int:
    assignment = tuple(json.loads(a.assign)) if a.assign else None
    spec = FamilySpec(a.family, a.d, a.t, assignment, a.boost)
    rec = generate(spec)
    _emit(serialize_graph(rec.graph, a.format), a.out)
    payload = rec.to_dict()
    if a.validate:
        val = validate_family(rec, budget=a.budget)
        payload = val.to_dict()
    text = json.dumps(payload, indent=2) + "\n"
    if a.record:
        Path(a.record).write_text(text)
    elif a.out:
        sys.stdout.write(text)
    if a.validate and not val.ok:
        return 1
    return 0


def cmd_compute(a) -> int:
    g = read_graph(a.graph, a.format)
    kind = ParameterKind(a.kind)
    try:
        cert = solve(g, kind, budget=a.budget)
    except NotApplicable as exc:
        _emit(json.dumps({"kind": kind.value, "status": "not-applicable", "reason": str(exc)}) + "\n", a.out)
        return 0
    except BudgetExceeded as exc:
        _emit(json.dumps({"kind": kind.value, "status": "budget-exceeded", "reason": str(exc)}) + "\n", a.out)
        return 0
    _emit(json.dumps(cert.to_dict(), indent=2) + "\n", a.out)
    return 0


def cmd_bondage(a) -> int:
    g = read_graph(a.graph, a.format)
    kind = BondageKind(a.kind)
    try:
        res = bondage(g, kind, cap=a.cap, budget=a.budget)
    except NotApplicable as exc:
        _emit(json.dumps({"kind": kind.value, "status": "not-applicable", "reason": str(exc)}) + "\n", a.out)
        return 0
    payload = res.to_dict()
    payload["upper_bounds"] = [
        {"name": b.name, "applicable": b.applicable, "value": b.value, "reason": b.reason}
        for b in check_bondage_upper_bounds(g, kind)
    ]
    _emit(json.dumps(payload, indent=2) + "\n", a.out)
    return 0


def cmd_verify(a) -> int:
    g = read_graph(a.graph, a.format)
    theorems, known = _ids(a)
    res = verify_all(g, _surface_opts(a), theorems, known, a.budget, a.cap)
    inputs = {"graph": a.graph, "chi": a.chi, "orientable_genus": a.orientable_genus,
              "nonorientable_genus": a.nonorientable_genus, "genus_from_bounds": a.genus_from_bounds,
              "theorems": a.theorem, "budget": a.budget, "cap": a.cap}
    report = build_report("verify", inputs, [res], timestamp=not a.no_timestamp)
    _emit(dump_report(report), a.out)
    if not a.quiet:
        for v in res.verdicts:
            print(f"{v.theorem_id:<16} {v.status:<15} lhs={display(v.lhs):<10} rhs={display(v.rhs)}", file=sys.stderr)
        for k in res.known:
            print(f"{k.result_id:<16} {k.status:<15} lhs={display(k.lhs):<10} rhs={display(k.rhs)}", file=sys.stderr)
    _write_extras(a, [res], report["summary"])
    return 1 if report["summary"]["violations"] else 0


def cmd_sweep(a) -> int:
    theorems, known = _ids(a)
    if a.p is None and a.m_min is None and a.m_max is None:
        raise UsageError("give --p or --m-min/--m-max")
    spec = CorpusSpec(
        count=a.count, n_min=a.n_min, n_max=a.n_max, p=a.p, m_min=a.m_min, m_max=a.m_max,
        constraints=frozenset(a.constraint or ()), min_degree=a.min_degree, seed=a.seed,
        max_attempts=a.max_attempts,
    )
    results = sweep(spec, _surface_opts(a), theorems, known, a.budget, a.cap, a.jobs)
    inputs = {"count": a.count, "n_min": a.n_min, "n_max": a.n_max, "p": a.p, "m_min": a.m_min,
              "m_max": a.m_max, "constraints": sorted(spec.constraints), "min_degree": a.min_degree,
              "seed": a.seed, "theorems": a.theorem, "budget": a.budget, "cap": a.cap,
              "chi": a.chi, "genus_from_bounds": a.genus_from_bounds}
    report = build_report("sweep", inputs, results, timestamp=not a.no_timestamp)
    _emit(dump_report(report), a.out)
    _write_extras(a, results, report["summary"])
    if not a.quiet:
        s = report["summary"]
        print(f"graphs={s['graphs']} bounds={s['bounds']} known={s['known']} "
              f"violations={len(s['violations'])}", file=sys.stderr)
    return 1 if report["summary"]["violations"] else 0


def cmd_formulas(a) -> int:
    name, vals = a.name, a.values
    if name in CEILINGS:
        if len(vals) != 1:
            raise UsageError(f"{name} takes one integer argument")
        print(CEILINGS[name](int(vals[0])))
        return 0
    if name == "chi":
        if len(vals) != 1:
            raise UsageError("chi takes a surface such as S3 or N6")
        print(SurfaceSpec.parse(vals[0]).chi)
        return 0
    if name == "ad-ceiling":
        if len(vals) != 3:
            raise UsageError("ad-ceiling takes girth chi n")
        print(display(average_degree_ceiling(int(vals[0]), int(vals[1]), int(vals[2]))))
        return 0
    # theorem right-hand sides from literal inputs
    ctx = BoundContext(connected=True)
    for item in vals:
        if "=" not in item:
            raise UsageError(f"theorem inputs are key=value pairs, got {item!r}")
        key, raw = item.split("=", 1)
        key = {"delta": "min_degree", "Delta": "max_degree", "g": "orientable_genus",
               "gbar": "nonorientable_genus", "ad": "average_degree"}.get(key, key)
        if key == "i":
            ctx.min_degree = 4 + int(raw)
            ctx.planar = True
            continue
        if not hasattr(ctx, key):
            raise UsageError(f"unknown input {key!r}")
        if key in ("planar", "triangle_free", "connected"):
            setattr(ctx, key, raw.lower() in ("1", "true", "yes"))
        elif key == "average_degree":
            setattr(ctx, key, Fraction(raw))
        else:
            setattr(ctx, key, int(raw))
    if name in ("T4.3", "T4.4") and ctx.planar is None:
        ctx.planar = True
    if ctx.min_degree is None:
        # formulas evaluate right-hand sides; assume the degree hypothesis
        ctx.min_degree = {"T4.1": 3, "T4.2": 4, "T4.4": 5}.get(name.split("(")[0])
    try:
        v = theorem_bound(name, ctx)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if not v.applicable:
        print(f"not-applicable: {v.reason}")
        return 0
    if a.json:
        print(json.dumps({"theorem": name, "rhs": as_json_number(v.rhs), "status": v.status}))
    else:
        print(display(v.rhs) if v.lhs is None else f"{display(v.rhs)} ({v.status})")
    return 1 if v.status == "violation" else 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfdom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen-family", help="build a P1/P2/P3 extremal graph")
    s.add_argument("family", choices=["P1", "P2", "P3"])
    s.add_argument("d", type=int)
    s.add_argument("t", type=int)
    s.add_argument("--assign", help="JSON list: outer index for each clique vertex (explicit policy)")
    s.add_argument("--boost", action="store_true", help="require the minimum-degree variant")
    s.add_argument("--format", choices=FORMATS, default="edge-list")
    s.add_argument("--out", help="graph file (default stdout)")
    s.add_argument("--record", help="write the family record JSON here")
    s.add_argument("--validate", action="store_true", help="solve the parameter and check equality")
    s.add_argument("--budget", type=int, default=10**7)
    s.set_defaults(func=cmd_gen_family)

    s = sub.add_parser("compute", help="exact parameter with certificate")
    s.add_argument("graph")
    s.add_argument("--kind", required=True, choices=[k.value for k in ParameterKind])
    s.add_argument("--format", choices=FORMATS)
    s.add_argument("--out")
    s.add_argument("--budget", type=int, default=10**7)
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("bondage", help="exact bondage number search")
    s.add_argument("graph")
    s.add_argument("--kind", required=True, choices=[k.value for k in BondageKind])
    s.add_argument("--format", choices=FORMATS)
    s.add_argument("--out")
    _budget_args(s)
    s.set_defaults(func=cmd_bondage)

    for name, func in (("verify", cmd_verify), ("sweep", cmd_sweep)):
        s = sub.add_parser(name, help=f"{name} bounds and known results")
        if name == "verify":
            s.add_argument("graph", nargs="?", default="-")
            s.add_argument("--format", choices=FORMATS)
        else:
            s.add_argument("--count", type=int, required=True)
            s.add_argument("--n-min", type=int, required=True)
            s.add_argument("--n-max", type=int, required=True)
            s.add_argument("--p", type=float)
            s.add_argument("--m-min", type=int)
            s.add_argument("--m-max", type=int)
            s.add_argument("--constraint", action="append", choices=CONSTRAINTS)
            s.add_argument("--min-degree", type=int, default=0)
            s.add_argument("--seed", type=int, default=0)
            s.add_argument("--max-attempts", type=int, default=10**5)
            s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--theorem", action="append", help="bound or known-result id (repeatable; prefixes allowed)")
        _surface_args(s)
        _budget_args(s)
        s.add_argument("--out", help="report path (default stdout)")
        s.add_argument("--csv", help="also write one CSV row per (graph, theorem)")
        s.add_argument("--figure", help="also render a slack figure (PNG)")
        s.add_argument("--no-timestamp", action="store_true")
        s.add_argument("--quiet", action="store_true")
        s.set_defaults(func=func)

    s = sub.add_parser("formulas", help="evaluate h1/h2/k1/k2, chi, ad-ceiling or a theorem rhs")
    s.add_argument("name", help="h1|h2|k1|k2|chi|ad-ceiling|<theorem id>")
    s.add_argument("values", nargs="*", help="integer argument(s) or key=value inputs")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_formulas)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if getattr(args, "graph", None) == "-":
        args.graph = "/dev/stdin"
    try:
        return args.func(args)
    except (UsageError, GraphError, SurfaceError, FamilyError, CorpusError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
