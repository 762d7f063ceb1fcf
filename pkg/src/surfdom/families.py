"""Generators for the three tightness constructions and their self-checks.

Labeling: clique vertices come first (``0..n-d-1``), then the outer
structure in construction order. The default ``balanced`` policy attaches
clique vertex ``c`` to outer vertex ``c mod d`` (P1, P2) or to path endpoint
``c mod 2`` (P3).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .graph import Graph
from .invariants import BudgetExceeded, ParameterKind, solve
from .surfaces import BoundContext, SurfaceSpec, theorem_bound

FAMILIES = ("P1", "P2", "P3")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    d: int
    t: int
    assignment: Optional[tuple[int, ...]] = None  # None means balanced
    min_degree_boost: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilyError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.assignment is not None:
            object.__setattr__(self, "assignment", tuple(int(a) for a in self.assignment))
        if self.t < self.d:
            raise FamilyError(f"{self.family} needs t >= d (got t={self.t}, d={self.d})")
        if self.family == "P1":
            if self.d < 6:
                raise FamilyError(f"P1 needs d >= 6 (got d={self.d})")
            if self.d % 4 != 2:
                raise FamilyError(f"P1 needs d = 2 (mod 4) (got d={self.d})")
        elif self.d < 4:
            raise FamilyError(f"{self.family} needs d >= 4 (got d={self.d})")
        if self.family == "P3" and self.min_degree_boost:
            raise FamilyError("min_degree_boost applies to P1 and P2 only")

    @property
    def n(self) -> int:
        if self.family == "P1":
            return self.d + 4 * self.t + 1
        if self.family == "P2":
            return self.d + 4 * self.t + (1 if self.d % 2 else 2)
        return self.d + self.t

    @property
    def clique_size(self) -> int:
        return self.n - self.d

    @property
    def policy(self) -> str:
        return "balanced" if self.assignment is None else "explicit"


@dataclass(frozen=True)
class FamilyRecord:
    spec: FamilySpec
    graph: Graph
    expected_n: int
    expected_m: int
    expected_kind: ParameterKind
    expected_value: int
    p_or_k: int
    surfaces: tuple[SurfaceSpec, ...]

    @property
    def chi(self) -> int:
        return self.surfaces[0].chi

    def to_dict(self) -> dict:
        return {
            "family": self.spec.family,
            "d": self.spec.d,
            "t": self.spec.t,
            "policy": self.spec.policy,
            "assignment": list(self.spec.assignment) if self.spec.assignment else None,
            "min_degree_boost": self.spec.min_degree_boost,
            "n": self.expected_n,
            "m": self.expected_m,
            "expected_parameter": {"kind": self.expected_kind.value, "value": self.expected_value},
            "p" if self.spec.family != "P3" else "k": self.p_or_k,
            "surfaces": [s.name for s in self.surfaces],
            "chi": self.chi,
        }


def expected_edges(spec: FamilySpec) -> int:
    base = comb(spec.n - spec.d + 1, 2)
    if spec.family == "P1":
        return base + spec.d // 2
    if spec.family == "P2":
        return base
    return base + spec.d - 1


def predicted_genus_parameter(spec: FamilySpec) -> int:
    """p for P1/P2 and k for P3, from the closed forms in t and d."""
    d, t = spec.d, spec.t
    if spec.family == "P1":
        num = 4 * (4 * t * t + t) + 2 - d
        return num // 4
    if spec.family == "P2":
        if d % 2:
            return 4 * t * t + t + (1 - d) // 2
        return 4 * t * t + 3 * t + 1 - d // 2
    return comb(t, 2)


def _assignment(spec: FamilySpec) -> tuple[int, ...]:
    c = spec.clique_size
    slots = 2 if spec.family == "P3" else spec.d
    if spec.assignment is None:
        return tuple(i % slots for i in range(c))
    a = spec.assignment
    if len(a) != c:
        raise FamilyError(f"assignment must map all {c} clique vertices (got {len(a)})")
    if any(not 0 <= x < slots for x in a):
        raise FamilyError(f"assignment values must lie in 0..{slots - 1}")
    return a


_KIND = {"P1": ParameterKind.TOTAL, "P2": ParameterKind.WEAKLY_CONNECTED, "P3": ParameterKind.CONNECTED}
_THEOREMS = {"P1": ("T3.1(i)", "T3.1(ii)"), "P2": ("T3.2(1)", "T3.2(2)"), "P3": ("T3.3",)}
_BOOST_DEGREE = {"P1": 5, "P2": 4}


def generate(spec: FamilySpec) -> FamilyRecord:
    c, d = spec.clique_size, spec.d
    assign = _assignment(spec)
    edges = list(itertools.combinations(range(c), 2))
    if spec.family == "P1":
        edges += [(c + 2 * j, c + 2 * j + 1) for j in range(d // 2)]
        edges += [(v, c + a) for v, a in enumerate(assign)]
        hit = {a // 2 for a in assign}
        if len(hit) != d // 2:
            raise FamilyError("every K2 component needs at least one clique neighbour")
    elif spec.family == "P2":
        edges += [(v, c + a) for v, a in enumerate(assign)]
        if len(set(assign)) != d:
            raise FamilyError("every independent vertex needs at least one clique neighbour")
    else:
        edges += [(c + j, c + j + 1) for j in range(d - 1)]
        ends = (c, c + d - 1)
        edges += [(v, ends[a]) for v, a in enumerate(assign)]
        if len(set(assign)) != 2:
            raise FamilyError("both path endpoints need at least one clique neighbour")
    g = Graph(spec.n, edges)

    m = expected_edges(spec)
    if g.m != m:
        raise AssertionError(f"construction produced {g.m} edges, expected {m}")
    cyc = g.m - g.n + 1
    p_or_k = predicted_genus_parameter(spec)
    if spec.family == "P3":
        if p_or_k != cyc:
            raise AssertionError("k does not equal m - n + 1")
        surfaces = (SurfaceSpec(False, p_or_k),)
    else:
        if 2 * p_or_k != cyc:
            raise AssertionError("2p does not equal m - n + 1")
        surfaces = (SurfaceSpec(False, 2 * p_or_k),)
        need = _BOOST_DEGREE[spec.family]
        if g.min_degree >= need:
            surfaces += (SurfaceSpec(True, p_or_k),)
        elif spec.min_degree_boost:
            raise FamilyError(f"assignment leaves minimum degree {g.min_degree} < {need}")
    return FamilyRecord(spec, g, spec.n, m, _KIND[spec.family], d, p_or_k, surfaces)


@dataclass
class Check:
    name: str
    ok: Optional[bool]  # None: skipped
    detail: str = ""


@dataclass
class FamilyValidation:
    record: FamilyRecord
    checks: list[Check] = field(default_factory=list)
    verdicts: list = field(default_factory=list)
    solved: Optional[int] = None

    @property
    def ok(self) -> bool:
        return all(c.ok is not False for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.ok is False]

    def to_dict(self) -> dict:
        return {
            "record": self.record.to_dict(),
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def _structure_checks(rec: FamilyRecord) -> list[Check]:
    g, spec = rec.graph, rec.spec
    c, d = spec.clique_size, spec.d
    clique = set(range(c))
    outer = range(c, g.n)
    checks = [
        Check("order", g.n == rec.expected_n, f"n={g.n}"),
        Check("size", g.m == rec.expected_m, f"m={g.m}, expected {rec.expected_m}"),
        Check("connected", g.is_connected()),
        Check(
            "clique",
            all(g.has_edge(u, v) for u, v in itertools.combinations(range(c), 2)),
            f"K_{c} on vertices 0..{c - 1}",
        ),
    ]
    outer_nbrs = [[w for w in g.neighbors(v) if w >= c] for v in range(c)]
    checks.append(
        Check("one outer neighbour per clique vertex", all(len(x) == 1 for x in outer_nbrs))
    )
    attached = {x[0] for x in outer_nbrs if x}
    inner = [(u, v) for u, v in g.edge_list if u >= c]
    if spec.family == "P1":
        want = {(c + 2 * j, c + 2 * j + 1) for j in range(d // 2)}
        checks.append(Check("outer is (d/2)K2", set(inner) == want))
        cover = all((c + 2 * j in attached) or (c + 2 * j + 1 in attached) for j in range(d // 2))
        checks.append(Check("every K2 component attached", cover))
    elif spec.family == "P2":
        checks.append(Check("outer is independent", not inner))
        checks.append(Check("every independent vertex attached", attached == set(outer)))
    else:
        want = {(c + j, c + j + 1) for j in range(d - 1)}
        checks.append(Check("outer is a path", set(inner) == want))
        ends = {c, c + d - 1}
        checks.append(Check("clique attaches to endpoints only", attached <= ends))
        checks.append(Check("both endpoints attached", attached == ends))
    cyc = g.m - g.n + 1
    target = cyc if spec.family == "P3" else cyc / 2
    checks.append(Check("genus parameter", rec.p_or_k == target, f"{rec.p_or_k} vs {target}"))
    if len(rec.surfaces) > 1:
        lam = g.edge_connectivity()
        checks.append(Check("4-edge-connected", lam >= 4, f"lambda={lam}"))
    return checks


def validate_family(rec: FamilyRecord, budget: int = 10**7) -> FamilyValidation:
    """Re-check a generated record: structure, edge count, solved parameter, equality verdicts."""
    out = FamilyValidation(rec)
    out.checks.extend(_structure_checks(rec))
    kind = rec.expected_kind
    try:
        cert = solve(rec.graph, kind, budget=budget)
        out.solved = cert.value
        out.checks.append(
            Check(f"{kind.symbol} = d", cert.value == rec.expected_value, f"solved {cert.value}")
        )
    except BudgetExceeded as exc:
        out.checks.append(Check(f"{kind.symbol} = d", None, f"skipped: {exc}"))
        return out
    g = rec.graph
    ctx = BoundContext(n=g.n, m=g.m, connected=g.is_connected(), chi=rec.chi, planar=None)
    setattr(ctx, kind.symbol, cert.value)
    for tid in _THEOREMS[rec.spec.family]:
        v = theorem_bound(tid, ctx)
        out.verdicts.append(v)
        out.checks.append(Check(f"{tid} equality", v.status == "equality", v.status))
    return out
