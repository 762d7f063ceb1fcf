"""Batch verification of bounds and known results, and the report schema."""

from __future__ import annotations

import csv
import datetime as _dt
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import __version__
from .analysis import GraphAnalysis, SurfaceOptions, fill_context
from .corpus import CorpusSpec, random_corpus
from .graph import Graph
from .invariants import DEFAULT_BUDGET
from .io import serialize_edge_list, serialize_graph6
from .known import KNOWN, KnownOutcome, check_known, expand_known_ids
from .surfaces import THEOREMS, BoundVerdict, as_json_number, display, expand_theorem_ids, theorem_bound

REPORT_VERSION = "1.0"


def split_ids(ids: Sequence[str]) -> tuple[list[str], list[str]]:
    """Separate surface-bound ids from known-result ids, expanding prefixes."""
    bounds, known = [], []
    for i in ids:
        if i.startswith("T2") or i in KNOWN:
            known.extend(k for k in expand_known_ids([i]) if k not in known)
        else:
            bounds.extend(t for t in expand_theorem_ids([i]) if t not in bounds)
    return bounds, known


@dataclass
class GraphResult:
    index: int
    graph: Graph
    verdicts: list[BoundVerdict] = field(default_factory=list)
    known: list[KnownOutcome] = field(default_factory=list)
    analysis: Optional[GraphAnalysis] = None

    @property
    def violations(self) -> list:
        out = [v for v in self.verdicts if v.status == "violation"]
        out += [k for k in self.known if k.status == "fails"]
        return out

    def to_dict(self) -> dict:
        an = self.analysis
        return {
            "index": self.index,
            "graph": graph_dict(self.graph),
            "certificates": {k.symbol: c.to_dict() for k, c in an.certificates.items()} if an else {},
            "bondage": {k.symbol: r.to_dict() for k, r in an.bondage_results.items()} if an else {},
            "errors": dict(sorted(an.errors.items())) if an else {},
            "verdicts": [v.to_dict() for v in self.verdicts],
            "known": [k.to_dict() for k in self.known],
        }


def graph_dict(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "edge_list": serialize_edge_list(g), "graph6": serialize_graph6(g)}


def verify_all(
    g: Graph,
    opts: Optional[SurfaceOptions] = None,
    theorems: Optional[Sequence[str]] = None,
    known: Optional[Sequence[str]] = None,
    budget: int = DEFAULT_BUDGET,
    cap: Optional[int] = None,
    index: int = 0,
) -> GraphResult:
    """Evaluate every requested bound and known result on one graph.

    Defaults to all bounds and all known results; ids may be prefixes. Parameters are computed
    only when some requested result can apply; budget overruns turn the
    dependent verdicts indeterminate.
    """
    theorems = list(THEOREMS) if theorems is None else expand_theorem_ids(theorems)
    known = list(KNOWN) if known is None else expand_known_ids(known)
    an = GraphAnalysis(g, budget=budget, cap=cap)
    ctx = an.base_context(opts)
    fill_context(an, ctx, theorems)
    res = GraphResult(index, g, analysis=an)
    res.verdicts = [theorem_bound(t, ctx) for t in theorems]
    res.known = [check_known(an, k, ctx) for k in known]
    return res


def summarize(results: Sequence[GraphResult]) -> dict:
    counts = {"holds": 0, "equality": 0, "not-applicable": 0, "indeterminate": 0, "violation": 0}
    known_counts = {"holds": 0, "fails": 0, "not-applicable": 0, "indeterminate": 0}
    violations = []
    for r in results:
        for v in r.verdicts:
            counts[v.status] += 1
            if v.status == "violation":
                violations.append(
                    {
                        "graph_index": r.index,
                        "theorem": v.theorem_id,
                        "lhs": as_json_number(v.lhs),
                        "rhs": as_json_number(v.rhs),
                        "graph": graph_dict(r.graph),
                    }
                )
        for k in r.known:
            known_counts[k.status] += 1
            if k.status == "fails":
                violations.append(
                    {
                        "graph_index": r.index,
                        "theorem": k.result_id,
                        "lhs": as_json_number(k.lhs),
                        "rhs": as_json_number(k.rhs),
                        "graph": graph_dict(r.graph),
                    }
                )
    return {"graphs": len(results), "bounds": counts, "known": known_counts, "violations": violations}


def build_report(command: str, inputs: dict, results: Sequence[GraphResult], timestamp: bool = True) -> dict:
    report = {
        "version": REPORT_VERSION,
        "tool": f"surfdom {__version__}",
        "command": command,
        "inputs": inputs,
        "results": [r.to_dict() for r in results],
        "summary": summarize(results),
    }
    if timestamp:
        report["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


CSV_FIELDS = ("graph_index", "n", "m", "graph6", "theorem", "status", "lhs", "rhs", "rhs_display", "via_upper_bound", "reason")


def csv_rows(results: Sequence[GraphResult]) -> list[dict]:
    rows = []
    for r in results:
        base = {"graph_index": r.index, "n": r.graph.n, "m": r.graph.m, "graph6": serialize_graph6(r.graph)}
        for v in r.verdicts:
            rows.append(
                dict(base, theorem=v.theorem_id, status=v.status, lhs=display(v.lhs), rhs=display(v.rhs),
                     rhs_display=display(v.rhs), via_upper_bound=v.via_upper_bound, reason=v.reason)
            )
        for k in r.known:
            rows.append(
                dict(base, theorem=k.result_id, status=k.status, lhs=display(k.lhs), rhs=display(k.rhs),
                     rhs_display=display(k.rhs), via_upper_bound=k.extra.get("via_upper_bound", False),
                     reason=k.detail)
            )
    return rows


def to_csv(results: Sequence[GraphResult]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(csv_rows(results))
    return buf.getvalue()


def _verify_job(args):
    return verify_all(*args)


def sweep(
    spec: CorpusSpec,
    opts: Optional[SurfaceOptions] = None,
    theorems: Optional[Sequence[str]] = None,
    known: Optional[Sequence[str]] = None,
    budget: int = DEFAULT_BUDGET,
    cap: Optional[int] = None,
    jobs: int = 1,
) -> list[GraphResult]:
    graphs = random_corpus(spec)
    args = [(g, opts, theorems, known, budget, cap, i) for i, g in enumerate(graphs)]
    if jobs <= 1:
        return [_verify_job(a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_job, args))
