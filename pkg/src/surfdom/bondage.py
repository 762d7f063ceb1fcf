"""Restrained, total restrained and Roman bondage numbers by edge-subset search.

Edge subsets are tried by increasing size, lexicographically over the sorted
edge list. All three base parameters only lose valid witnesses when edges are
removed, so the parameter of ``G - E`` exceeds the base value exactly when no
witness of value <= base that is valid in ``G`` stays valid in ``G - E``.
Those witnesses are collected once and re-checked per subset.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, mask_to_list
from .invariants import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    NotApplicable,
    ParameterKind,
    iter_vertex_subsets,
    roman_value_masks,
    set_valid_masks,
    solve,
)

DEFAULT_CAP = 8


class BondageKind(enum.Enum):
    RESTRAINED = "restrained"
    TOTAL_RESTRAINED = "total-restrained"
    ROMAN = "roman"

    @property
    def base(self) -> ParameterKind:
        return ParameterKind(self.value)

    @property
    def forbids_isolated(self) -> bool:
        """Removal must leave no isolated vertex."""
        return self is BondageKind.TOTAL_RESTRAINED

    @property
    def symbol(self) -> str:
        return {"restrained": "b_r", "total-restrained": "b_tr", "roman": "b_R"}[self.value]


@dataclass(frozen=True)
class BondageResult:
    """Outcome of a bondage search.

    ``status`` is ``"exact"`` (``value`` and ``witness`` set), ``"infinite"``
    (every admissible subset was checked and none increases the parameter) or
    ``"unknown"`` (cap or budget reached; the bondage number is at least
    ``lower_bound``).
    """

    kind: BondageKind
    status: str
    base_value: int
    value: Optional[int]
    witness: Optional[tuple]
    lower_bound: float
    examined: int
    cap: int

    @property
    def is_exact(self) -> bool:
        return self.status == "exact"

    def as_bound_value(self):
        """Value for bound checks: an int, ``math.inf``, or an ``AtLeast``."""
        from .surfaces import AtLeast

        if self.status == "exact":
            return self.value
        if self.status == "infinite":
            return math.inf
        return AtLeast(self.lower_bound)

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind.value,
            "status": self.status,
            "base_value": self.base_value,
            "examined": self.examined,
            "cap": self.cap,
        }
        if self.status == "exact":
            d["value"] = self.value
            d["witness"] = [list(e) for e in self.witness]
        elif self.status == "infinite":
            d["value"] = "infinite"
        else:
            d["at_least"] = self.lower_bound
        return d


def _candidates(g: Graph, kind: BondageKind, base: int, budget: int) -> list[int]:
    """Witness masks of value <= base that are valid in ``g``."""
    out = []
    examined = 0
    full = g.full_mask
    if kind is BondageKind.ROMAN:
        for k in range(0, base // 2 + 1):
            for v2 in iter_vertex_subsets(g.n, k):
                examined += 1
                if examined > budget:
                    raise BudgetExceeded("candidate collection exhausted budget", examined, k)
                if roman_value_masks(g.adj, full, v2) <= base:
                    out.append(v2)
        return out
    for k in range(1, base + 1):
        for s in iter_vertex_subsets(g.n, k):
            examined += 1
            if examined > budget:
                raise BudgetExceeded("candidate collection exhausted budget", examined, k)
            if set_valid_masks(g.adj, full, kind.base, s):
                out.append(s)
    return out


def _still_attained(adj, full, kind: BondageKind, base: int, candidates) -> bool:
    if kind is BondageKind.ROMAN:
        return any(roman_value_masks(adj, full, v2) <= base for v2 in candidates)
    return any(set_valid_masks(adj, full, kind.base, s) for s in candidates)


def bondage(
    g: Graph,
    kind: BondageKind | str,
    cap: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
) -> BondageResult:
    """Smallest number of edges whose removal raises the base parameter.

    ``cap`` bounds the subset size (default ``min(m, 8)``); ``budget`` bounds
    the number of subsets evaluated; running out mid-search gives an
    ``unknown`` result. Raises :class:`NotApplicable` when the base parameter
    is undefined on ``g`` and :class:`BudgetExceeded` when the base value or
    its witness list cannot be computed within ``budget``.
    """
    kind = BondageKind(kind)
    if kind.forbids_isolated and g.has_isolated_vertex():
        raise NotApplicable(f"{kind.symbol}: graph has an isolated vertex")
    if g.n == 0:
        raise NotApplicable(f"{kind.symbol}: empty graph")
    edges = g.edge_list
    m = len(edges)
    cap = min(m, DEFAULT_CAP) if cap is None else min(cap, m)
    if cap < 0:
        raise GraphError("cap must be nonnegative")

    base = solve(g, kind.base, budget=budget).value
    candidates = _candidates(g, kind, base, budget)
    full = g.full_mask
    examined = 0
    for k in range(1, cap + 1):
        for subset in itertools.combinations(range(m), k):
            examined += 1
            if examined > budget:
                return BondageResult(kind, "unknown", base, None, None, k, examined, cap)
            adj = list(g.adj)
            for idx in subset:
                u, v = edges[idx]
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            if kind.forbids_isolated and not all(adj):
                continue
            if not _still_attained(adj, full, kind, base, candidates):
                witness = tuple(edges[i] for i in subset)
                return BondageResult(kind, "exact", base, k, witness, k, examined, cap)
    if cap == m:
        return BondageResult(kind, "infinite", base, None, None, math.inf, examined, cap)
    return BondageResult(kind, "unknown", base, None, None, cap + 1, examined, cap)


@dataclass(frozen=True)
class UpperBound:
    name: str
    applicable: bool
    value: Optional[int]
    reason: str
    path: Optional[tuple[int, int, int]] = None


def check_bondage_upper_bounds(g: Graph, kind: BondageKind | str) -> list[UpperBound]:
    """Closed-form upper bounds on the bondage number of ``kind``.

    Inapplicable bounds are kept in the list with ``applicable=False`` and a
    reason.
    """
    from .graph import tb_constraint

    kind = BondageKind(kind)
    out = []
    if kind is BondageKind.RESTRAINED:
        if g.m and g.min_degree >= 2:
            out.append(UpperBound("T2.2", True, g.min_edge_degree(), "delta >= 2; bound is xi(G)"))
        else:
            out.append(UpperBound("T2.2", False, None, "requires minimum degree >= 2"))
    elif kind is BondageKind.TOTAL_RESTRAINED:
        if not g.is_connected() or g.n < 5:
            out.append(UpperBound("T2.3", False, None, "requires a connected graph on >= 5 vertices"))
        else:
            best = g.min_path3_degree_sum(tb_constraint)
            if best is None:
                out.append(UpperBound("T2.3", False, None, "no qualifying path x-y-z"))
            else:
                path, s = best
                out.append(UpperBound("T2.3", True, s - 4, "min qualifying path degree sum - 4", path))
        if g.n >= 4 and g.is_complete():
            out.append(UpperBound("T2.4", True, g.n - 1, "complete graph: exact value n - 1"))
    else:
        best = g.min_path3_degree_sum()
        if best is None:
            out.append(UpperBound("T2.5", False, None, "graph has no path on three vertices"))
        else:
            path, s = best
            out.append(UpperBound("T2.5", True, s - 3, "min path degree sum - 3", path))
    return out


def removal_increases(g: Graph, kind: BondageKind, removed) -> bool:
    """Re-solve the base parameter on ``g - removed`` and compare, from scratch."""
    kind = BondageKind(kind)
    h = g.remove_edges(removed)
    if kind.forbids_isolated and h.has_isolated_vertex():
        return False
    return solve(h, kind.base).value > solve(g, kind.base).value


__all__ = [
    "BondageKind",
    "BondageResult",
    "UpperBound",
    "bondage",
    "check_bondage_upper_bounds",
    "removal_increases",
    "DEFAULT_CAP",
    "mask_to_list",
]
