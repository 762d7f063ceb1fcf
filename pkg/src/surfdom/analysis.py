"""Per-graph lazy cache of exact invariants and the bound context built from them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bondage import BondageKind, BondageResult, bondage
from .graph import Graph
from .invariants import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    NotApplicable,
    ParameterCertificate,
    ParameterKind,
    solve,
)
from .surfaces import BoundContext, nonorientable_genus_upper, orientable_genus_upper


@dataclass
class SurfaceOptions:
    """What the caller knows about where the graph lives.

    ``chi`` is a certified Euler characteristic of a surface the graph is
    2-cell embedded on. Genus values are taken as the graph's genus.
    ``genus_from_bounds`` fills gaps from the cycle-rank embedding bounds,
    flagged as upper bounds.
    """

    chi: Optional[int] = None
    orientable_genus: Optional[int] = None
    nonorientable_genus: Optional[int] = None
    genus_from_bounds: bool = False


class GraphAnalysis:
    def __init__(self, g: Graph, budget: int = DEFAULT_BUDGET, cap: Optional[int] = None):
        self.g = g
        self.budget = budget
        self.cap = cap
        self.certificates: dict[ParameterKind, ParameterCertificate] = {}
        self.bondage_results: dict[BondageKind, BondageResult] = {}
        self.errors: dict[str, str] = {}
        self._planar: Optional[bool] = None

    @property
    def planar(self) -> bool:
        if self._planar is None:
            self._planar = self.g.is_planar()
        return self._planar

    def param(self, kind: ParameterKind) -> Optional[int]:
        """Exact value, or None (reason stored in ``errors``)."""
        if kind in self.certificates:
            return self.certificates[kind].value
        if kind.symbol in self.errors:
            return None
        try:
            cert = solve(self.g, kind, budget=self.budget)
        except NotApplicable as exc:
            self.errors[kind.symbol] = f"not-applicable: {exc}"
            return None
        except BudgetExceeded as exc:
            self.errors[kind.symbol] = f"budget: {exc}"
            return None
        self.certificates[kind] = cert
        return cert.value

    def bond(self, kind: BondageKind) -> Optional[BondageResult]:
        if kind in self.bondage_results:
            return self.bondage_results[kind]
        if kind.symbol in self.errors:
            return None
        try:
            res = bondage(self.g, kind, cap=self.cap, budget=self.budget)
        except NotApplicable as exc:
            self.errors[kind.symbol] = f"not-applicable: {exc}"
            return None
        except BudgetExceeded as exc:
            self.errors[kind.symbol] = f"budget: {exc}"
            return None
        self.bondage_results[kind] = res
        return res

    def bond_value(self, kind: BondageKind):
        res = self.bond(kind)
        return None if res is None else res.as_bound_value()

    def budget_failures(self) -> frozenset:
        out = {k for k, v in self.errors.items() if v.startswith("budget")}
        out |= {k.symbol for k, r in self.bondage_results.items() if r.status == "unknown"}
        return frozenset(out)

    def base_context(self, opts: Optional[SurfaceOptions] = None) -> BoundContext:
        """Graph-derived symbols plus surface data; no expensive parameters."""
        g = self.g
        opts = opts or SurfaceOptions()
        ds = g.degree_summary()
        ctx = BoundContext(
            n=g.n,
            m=g.m,
            connected=g.is_connected(),
            min_degree=ds.min_degree,
            max_degree=ds.max_degree,
            xi=ds.min_edge_degree,
            girth=g.girth,
            average_degree=ds.average_degree,
            triangle_free=not g.has_triangle(),
            planar=self.planar,
        )
        if opts.orientable_genus is not None:
            ctx.orientable_genus = opts.orientable_genus
        elif self.planar:
            ctx.orientable_genus = 0
        if opts.nonorientable_genus is not None:
            ctx.nonorientable_genus = opts.nonorientable_genus
        if opts.genus_from_bounds:
            if ctx.orientable_genus is None:
                try:
                    ctx.orientable_genus = orientable_genus_upper(g)
                    ctx.orientable_genus_exact = False
                except NotApplicable:
                    pass
            if ctx.nonorientable_genus is None:
                try:
                    ctx.nonorientable_genus = nonorientable_genus_upper(g)
                    ctx.nonorientable_genus_exact = False
                except NotApplicable:
                    pass
        if opts.chi is not None:
            ctx.chi, ctx.chi_exact = opts.chi, True
        else:
            # Largest chi among the surfaces we know the graph 2-cell embeds on.
            cands = []
            if ctx.orientable_genus is not None:
                cands.append((2 - 2 * ctx.orientable_genus, ctx.orientable_genus_exact))
            if ctx.nonorientable_genus is not None and ctx.nonorientable_genus >= 1:
                cands.append((2 - ctx.nonorientable_genus, ctx.nonorientable_genus_exact))
            if cands:
                ctx.chi, ctx.chi_exact = max(cands)
        return ctx


# Which expensive symbols each bound reads, and the cheap gate before computing them.
NEEDS = {
    "T3.1": ("gamma_t",),
    "T3.2": ("gamma_w",),
    "T3.3": ("gamma_c",),
    "T4.1": ("lambda_prime", "b_r"),
    "T4.2": ("b_tr",),
    "T4.3": ("b_tr",),
    "T4.4": ("b_R",),
}


def _gate(theorem_id: str, ctx: BoundContext) -> bool:
    head = theorem_id.split("(")[0]
    if head in ("T3.1", "T3.2", "T3.3"):
        return bool(ctx.connected) and ctx.chi is not None
    if head == "T4.1":
        return bool(ctx.connected) and ctx.min_degree >= 3
    if head == "T4.2":
        return bool(ctx.connected) and ctx.min_degree >= 4
    if head == "T4.3":
        return bool(ctx.planar) and ctx.min_degree in (4, 5)
    if head == "T4.4":
        return bool(ctx.planar) and ctx.min_degree == 5
    return False


_PARAM_OF = {
    "gamma_t": ParameterKind.TOTAL,
    "gamma_w": ParameterKind.WEAKLY_CONNECTED,
    "gamma_c": ParameterKind.CONNECTED,
    "lambda_prime": ParameterKind.RESTRICTED_EDGE_CONN,
}
_BOND_OF = {"b_r": BondageKind.RESTRAINED, "b_tr": BondageKind.TOTAL_RESTRAINED, "b_R": BondageKind.ROMAN}


def fill_context(an: GraphAnalysis, ctx: BoundContext, theorem_ids) -> BoundContext:
    """Compute the parameters the listed bounds need (only where their hypotheses can hold)."""
    for tid in theorem_ids:
        if not _gate(tid, ctx):
            continue
        for sym in NEEDS[tid.split("(")[0]]:
            if getattr(ctx, sym) is not None:
                continue
            if sym in _PARAM_OF:
                setattr(ctx, sym, an.param(_PARAM_OF[sym]))
            else:
                setattr(ctx, sym, an.bond_value(_BOND_OF[sym]))
    ctx.unknown = an.budget_failures()
    return ctx
