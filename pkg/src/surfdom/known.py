"""Checks of the previously known results the bounds are built from.

Each check evaluates the result's hypotheses on one graph and reports
``holds``, ``fails``, ``not-applicable`` or ``indeterminate``. Existential
results carry the witness found.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .analysis import GraphAnalysis
from .bondage import BondageKind
from .graph import mask_to_list, tb_constraint
from .invariants import ParameterKind
from .surfaces import AtLeast, BoundContext, average_degree_ceiling, h1, h2, k1, k2

KNOWN = (
    "T2.1",
    "T2.2",
    "T2.3",
    "T2.4",
    "T2.5",
    "T2.6(i)",
    "T2.6(ii)",
    "T2.6(iii)",
    "T2.7",
    "T2.8",
    "T2.9",
    "T2.10",
    "T2.11",
    "T2.12",
)

PATH_TYPES = ((3, 4, 11), (3, 7, 5), (3, 10, 4), (3, 15, 3), (4, 4, 9), (6, 4, 8), (7, 4, 7), (6, 5, 6))


@dataclass
class KnownOutcome:
    result_id: str
    status: str
    detail: str = ""
    lhs: object = None
    rhs: object = None
    witness: Optional[object] = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        from .surfaces import as_json_number

        d = {"result": self.result_id, "status": self.status, "detail": self.detail}
        if self.lhs is not None:
            d["lhs"] = as_json_number(self.lhs)
        if self.rhs is not None:
            d["rhs"] = as_json_number(self.rhs)
        if self.witness is not None:
            d["witness"] = self.witness
        d.update(self.extra)
        return d


def _na(rid, why):
    return KnownOutcome(rid, "not-applicable", why)


def _upper(rid: str, lhs, rhs, detail: str, an: GraphAnalysis, symbol: str) -> KnownOutcome:
    """lhs <= rhs, where lhs may be missing, a lower bound, or infinite."""
    if lhs is None:
        why = an.errors.get(symbol, f"{symbol} unavailable")
        return KnownOutcome(rid, "indeterminate", f"{detail}; {why}", rhs=rhs)
    if isinstance(lhs, AtLeast):
        if lhs.value > rhs:
            return KnownOutcome(rid, "fails", f"{detail}; {symbol} >= {lhs.value} > {rhs}", lhs, rhs)
        return KnownOutcome(rid, "indeterminate", f"{detail}; {symbol} only known >= {lhs.value}", lhs, rhs)
    ok = lhs <= rhs
    return KnownOutcome(rid, "holds" if ok else "fails", detail, lhs, rhs)


def _min_edge(g):
    degs = g.degrees
    best = min(g.edge_list, key=lambda e: (degs[e[0]] + degs[e[1]], e))
    s = degs[best[0]] + degs[best[1]]
    return best, s


def check_known(an: GraphAnalysis, which: str, ctx: Optional[BoundContext] = None) -> KnownOutcome:
    """Evaluate one known result on ``an.g``; ``ctx`` supplies surface data."""
    g = an.g
    ctx = ctx or an.base_context()
    rid = which
    if rid not in KNOWN:
        raise KeyError(f"unknown result id {which!r}; known: {', '.join(KNOWN)}")

    if rid == "T2.1":
        if not g.is_connected() or g.n < 4:
            return _na(rid, "requires a connected graph on >= 4 vertices")
        if g.is_star():
            return _na(rid, "star graph")
        return _upper(rid, an.param(ParameterKind.RESTRICTED_EDGE_CONN), g.min_edge_degree(),
                      "lambda_prime <= xi", an, "lambda_prime")

    if rid == "T2.2":
        if g.m == 0 or g.min_degree < 2:
            return _na(rid, "requires minimum degree >= 2")
        return _upper(rid, an.bond_value(BondageKind.RESTRAINED), g.min_edge_degree(),
                      "b_r <= xi", an, "b_r")

    if rid == "T2.3":
        if not g.is_connected() or g.n < 5:
            return _na(rid, "requires a connected graph on >= 5 vertices")
        best = g.min_path3_degree_sum(tb_constraint)
        if best is None:
            return _na(rid, "no path x-y-z with deg(x), deg(z) > 1 and G-{x,y,z} isolate-free")
        path, s = best
        out = _upper(rid, an.bond_value(BondageKind.TOTAL_RESTRAINED), s - 4,
                     "b_tr <= deg(x)+deg(y)+deg(z)-4", an, "b_tr")
        out.witness = list(path)
        return out

    if rid == "T2.4":
        if g.n < 4 or not g.is_complete():
            return _na(rid, "requires K_n with n >= 4")
        val = an.bond_value(BondageKind.TOTAL_RESTRAINED)
        if val is None or isinstance(val, AtLeast):
            if isinstance(val, AtLeast) and val.value > g.n - 1:
                return KnownOutcome(rid, "fails", "b_tr(K_n) = n - 1", val, g.n - 1)
            return KnownOutcome(rid, "indeterminate", "b_tr(K_n) = n - 1; search incomplete", val, g.n - 1)
        return KnownOutcome(rid, "holds" if val == g.n - 1 else "fails", "b_tr(K_n) = n - 1", val, g.n - 1)

    if rid == "T2.5":
        best = g.min_path3_degree_sum()
        if best is None:
            return _na(rid, "no path on three vertices")
        path, s = best
        out = _upper(rid, an.bond_value(BondageKind.ROMAN), s - 3,
                     "b_R <= deg(x)+deg(y)+deg(z)-3", an, "b_R")
        out.witness = list(path)
        return out

    if rid.startswith("T2.6"):
        if not g.is_connected() or g.n == 0:
            return _na(rid, "requires a connected graph")
        part = rid[5:-1]
        kind, threshold = {
            "i": (ParameterKind.TOTAL, 5),
            "ii": (ParameterKind.WEAKLY_CONNECTED, 3),
            "iii": (ParameterKind.CONNECTED, 3),
        }[part]
        gam = an.param(kind)
        if gam is None:
            return KnownOutcome(rid, "indeterminate", an.errors.get(kind.symbol, ""))
        if gam < threshold:
            return _na(rid, f"{kind.symbol}={gam} < {threshold}")
        rhs = comb(g.n - gam + 1, 2)
        if part == "i":
            rhs += gam // 2
        elif part == "iii":
            rhs += gam - 1
        return _upper(rid, g.m, rhs, f"m <= edge ceiling for {kind.symbol}={gam}", an, "m")

    if rid == "T2.7":
        if not g.is_connected() or g.n < 2:
            return _na(rid, "requires a connected graph on >= 2 vertices")
        gw = an.param(ParameterKind.WEAKLY_CONNECTED)
        return _upper(rid, gw, Fraction(g.n, 2), "gamma_w <= n/2", an, "gamma_w")

    if rid == "T2.8":
        if not g.is_connected() or g.n < 2:
            return _na(rid, "requires a connected nontrivial graph")
        degs, adj = g.degrees, g.adj
        best = None
        for u in range(g.n):
            near = adj[u]
            for w in mask_to_list(adj[u]):
                near |= adj[w]
            for v in mask_to_list(near & ~((1 << (u + 1)) - 1)):
                key = (degs[u] + degs[v], u, v)
                if best is None or key < best:
                    best = key
        rhs = 2 * g.average_degree()
        out = _upper(rid, best[0], rhs, "pair at distance <= 2 with deg(u)+deg(v) <= 2ad", an, "pair")
        out.witness = [best[1], best[2]]
        return out

    if rid == "T2.9":
        if not g.is_connected():
            return _na(rid, "requires a connected graph")
        if g.girth == math.inf:
            return _na(rid, "girth is infinite")
        if ctx.chi is None:
            return _na(rid, "missing chi (largest Euler characteristic of an embedding surface)")
        if ctx.chi > 2 or (ctx.chi == 2 and not ctx.planar):
            return _na(rid, f"chi={ctx.chi} is impossible for this graph")
        if ctx.chi < g.n - g.m + 1:
            return _na(rid, "chi < n - m + 1: no 2-cell embedding can exist")
        rhs = average_degree_ceiling(int(g.girth), ctx.chi, g.n)
        out = _upper(rid, g.average_degree(), rhs, "ad <= 2g/(g-2) (1 - chi/n)", an, "ad")
        out.extra["via_upper_bound"] = not ctx.chi_exact
        return out

    if rid in ("T2.10", "T2.11"):
        if not g.is_connected() or g.m == 0:
            return _na(rid, "requires a connected graph")
        if g.min_degree < 3:
            return _na(rid, f"minimum degree {g.min_degree} < 3")
        tf = not g.has_triangle()
        if rid == "T2.10":
            genus, exact = ctx.orientable_genus, ctx.orientable_genus_exact
            if genus is None:
                return _na(rid, "missing orientable genus")
            rhs = h2(genus) if tf else h1(genus)
        else:
            genus, exact = ctx.nonorientable_genus, ctx.nonorientable_genus_exact
            if genus is None or genus < 1:
                return _na(rid, "missing non-orientable genus >= 1")
            rhs = k2(genus) if tf else k1(genus)
        edge, s = _min_edge(g)
        out = _upper(rid, s, rhs, "edge with deg(x)+deg(y) <= ceiling" + (" (triangle-free)" if tf else ""), an, "edge")
        out.witness = list(edge)
        out.extra["via_upper_bound"] = not exact
        return out

    # T2.12
    if not ctx.planar:
        return _na(rid, "graph is not planar")
    if g.min_degree < 3:
        return _na(rid, f"minimum degree {g.min_degree} < 3")
    degs = g.degrees
    if any(degs[u] == 3 and degs[v] == 3 for u, v in g.edges):
        return _na(rid, "two adjacent vertices of degree 3")
    for typ in PATH_TYPES:
        path = g.find_path3_of_type(*typ)
        if path is not None:
            return KnownOutcome(rid, "holds", f"path of type {typ}", witness=list(path), extra={"type": list(typ)})
    return KnownOutcome(rid, "fails", "no 3-path of any listed type")


def expand_known_ids(ids) -> list[str]:
    out = []
    for rid in ids:
        matches = [k for k in KNOWN if k == rid or k.startswith(rid + "(")]
        if rid == "T2":
            matches = list(KNOWN)
        if not matches:
            raise KeyError(f"unknown result id {rid!r}; known: {', '.join(KNOWN)}")
        out.extend(k for k in matches if k not in out)
    return out
