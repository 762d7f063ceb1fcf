"""Surface arithmetic and exact evaluators for the domination/bondage bounds.

Every verdict is decided in integer or rational arithmetic. Bounds with a
square root are carried as :class:`Surd` values ``(base + sign*sqrt(r))/d``
and compared by squaring.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Optional, Union

from .graph import Graph
from .invariants import NotApplicable


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceSpec:
    """Orientable surface S_h (``genus=h``) or non-orientable N_q (``genus=q >= 1``)."""

    orientable: bool
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise SurfaceError("genus must be nonnegative")
        if not self.orientable and self.genus < 1:
            raise SurfaceError("a non-orientable surface has genus >= 1")

    @property
    def chi(self) -> int:
        return euler_characteristic(self)

    @property
    def name(self) -> str:
        return f"{'S' if self.orientable else 'N'}_{self.genus}"

    @classmethod
    def parse(cls, text: str) -> "SurfaceSpec":
        """Parse ``S3``, ``S_3``, ``N6`` or ``N_6``."""
        t = text.strip().replace("_", "")
        if len(t) < 2 or t[0].upper() not in "SN" or not t[1:].isdigit():
            raise SurfaceError(f"cannot parse surface {text!r}; use S<h> or N<q>")
        return cls(t[0].upper() == "S", int(t[1:]))


def euler_characteristic(surface: SurfaceSpec) -> int:
    if surface.orientable:
        return 2 - 2 * surface.genus
    if surface.genus < 1:
        raise SurfaceError("a non-orientable surface has genus >= 1")
    return 2 - surface.genus


# -- edge-degree ceilings ------------------------------------------------


def h1(x: int) -> int:
    if x < 0:
        raise SurfaceError("h1 is defined for x >= 0")
    return 2 * x + 13 if x <= 3 else 4 * x + 7


def h2(x: int) -> int:
    if x < 0:
        raise SurfaceError("h2 is defined for x >= 0")
    return 8 if x == 0 else 4 * x + 5


def k1(x: int) -> int:
    if x < 1:
        raise SurfaceError("k1 is defined for x >= 1")
    if x <= 2:
        return 2 * x + 11
    if x <= 5:
        return 2 * x + 9
    return 2 * x + 7


def k2(x: int) -> int:
    if x < 1:
        raise SurfaceError("k2 is defined for x >= 1")
    return 8 if x == 1 else 2 * x + 5


def edge_degree_ceiling(genus: int, orientable: bool, triangle_free: bool) -> int:
    """Guaranteed ceiling on min deg(x)+deg(y) over edges, for delta >= 3 graphs on the surface."""
    if orientable:
        return h2(genus) if triangle_free else h1(genus)
    return k2(genus) if triangle_free else k1(genus)


CEILINGS = {"h1": h1, "h2": h2, "k1": k1, "k2": k2}


# -- genus upper bounds --------------------------------------------------


def nonorientable_genus_upper(g: Graph) -> int:
    """Cycle rank m - n + 1: a 2-cell embedding on N_{m-n+1} always exists for non-trees."""
    if not g.is_connected() or g.n == 0:
        raise NotApplicable("graph is disconnected")
    if g.m < g.n:
        raise NotApplicable("graph is a tree")
    return g.m - g.n + 1


def orientable_genus_upper(g: Graph) -> int:
    """floor((m - n + 1)/2), valid for 4-edge-connected graphs."""
    if g.n < 2 or not g.is_connected() or g.edge_connectivity() < 4:
        raise NotApplicable("graph is not 4-edge-connected")
    return (g.m - g.n + 1) // 2


def average_degree_ceiling(girth, chi: int, n: int) -> Fraction:
    if girth == math.inf or girth is None:
        raise NotApplicable("girth is infinite")
    if girth < 3:
        raise SurfaceError("girth must be at least 3")
    if n <= 0:
        raise SurfaceError("n must be positive")
    return Fraction(2 * girth, girth - 2) * (1 - Fraction(chi, n))


# -- exact arithmetic ----------------------------------------------------


@dataclass(frozen=True)
class Surd:
    """The real number ``(base + sign*sqrt(radicand)) / divisor``."""

    base: int
    sign: int
    radicand: int
    divisor: int = 1

    def __post_init__(self):
        if self.radicand < 0:
            raise SurfaceError(f"negative radicand {self.radicand}")
        if self.sign not in (1, -1) or self.divisor <= 0:
            raise SurfaceError("sign must be +-1 and divisor positive")

    def exact(self) -> Union["Surd", Fraction]:
        root = math.isqrt(self.radicand)
        if root * root == self.radicand:
            return Fraction(self.base + self.sign * root, self.divisor)
        return self

    def __float__(self) -> float:
        return (self.base + self.sign * math.sqrt(self.radicand)) / self.divisor

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        text = f"({self.base} {op} sqrt({self.radicand}))"
        return text if self.divisor == 1 else f"{text}/{self.divisor}"


@dataclass(frozen=True)
class AtLeast:
    """A quantity known only from below (search stopped early)."""

    value: float


Number = Union[int, Fraction, Surd, float]


def _cmp_sqrt(y: Fraction, r: int) -> int:
    """Sign of y - sqrt(r)."""
    if y < 0:
        return -1
    d = y * y - r
    return (d > 0) - (d < 0)


def compare(a: Number, b: Number) -> int:
    """Exact three-way comparison of rationals, surds and infinities."""
    if isinstance(a, Surd) and isinstance(b, Surd):
        ea, eb = a.exact(), b.exact()
        if isinstance(ea, Surd) and isinstance(eb, Surd):
            raise TypeError("cannot compare two irrational surds")
        if isinstance(ea, Surd):
            return -compare(eb, ea)
        a = ea
    if isinstance(a, Surd):
        return -compare(b, a)
    if isinstance(a, float) or isinstance(b, float):
        if math.isinf(a if isinstance(a, float) else 0) or math.isinf(b if isinstance(b, float) else 0):
            fa, fb = float(a), float(b)
            return (fa > fb) - (fa < fb)
        raise TypeError("finite floats are not exact")
    a = Fraction(a)
    if isinstance(b, Surd):
        # a vs (base + sign*sqrt r)/d  <=>  a*d - base vs sign*sqrt r
        x = a * b.divisor - b.base
        return _cmp_sqrt(x, b.radicand) if b.sign > 0 else -_cmp_sqrt(-x, b.radicand)
    b = Fraction(b)
    return (a > b) - (a < b)


def as_json_number(x):
    if x is None or isinstance(x, bool):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Surd):
        return {"base": x.base, "sign": x.sign, "radicand": x.radicand, "divisor": x.divisor}
    if isinstance(x, AtLeast):
        return {"at_least": as_json_number(x.value)}
    if isinstance(x, float):
        return "infinite" if math.isinf(x) else x
    return x


def display(x) -> str:
    """Human-readable rendering; the only place floats appear."""
    if x is None:
        return "-"
    if isinstance(x, Surd):
        e = x.exact()
        return display(e) if isinstance(e, Fraction) else f"{x} ~ {float(x):.4f}"
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x} ~ {float(x):.4f}"
    if isinstance(x, AtLeast):
        return f">= {display(x.value)}"
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return str(x)


# -- verdicts ------------------------------------------------------------


@dataclass
class BoundContext:
    """Everything a bound evaluator may read. Unset fields are None.

    ``unknown`` names quantities whose computation was attempted but did not
    finish (budget), which makes dependent verdicts indeterminate rather than
    not-applicable.
    """

    n: Optional[int] = None
    m: Optional[int] = None
    connected: Optional[bool] = None
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    xi: Optional[int] = None
    girth: Optional[float] = None
    average_degree: Optional[Fraction] = None
    triangle_free: Optional[bool] = None
    planar: Optional[bool] = None
    chi: Optional[int] = None
    chi_exact: bool = True
    orientable_genus: Optional[int] = None
    orientable_genus_exact: bool = True
    nonorientable_genus: Optional[int] = None
    nonorientable_genus_exact: bool = True
    gamma_t: Optional[int] = None
    gamma_w: Optional[int] = None
    gamma_c: Optional[int] = None
    lambda_prime: Optional[int] = None
    b_r: Optional[Number | AtLeast] = None
    b_tr: Optional[Number | AtLeast] = None
    b_R: Optional[Number | AtLeast] = None
    unknown: frozenset = field(default_factory=frozenset)

    def echo(self) -> dict:
        out = {}
        for k, v in asdict(self).items():
            if k == "unknown":
                if v:
                    out[k] = sorted(v)
                continue
            if k.endswith("_exact"):
                if getattr(self, k[: -len("_exact")]) is not None:
                    out[k] = v
                continue
            if v is not None:
                out[k] = as_json_number(v)
        return out


@dataclass
class BoundVerdict:
    theorem_id: str
    applicable: bool
    reason: str
    relation: str = "<="
    lhs: object = None
    rhs: object = None
    lhs_symbol: str = ""
    holds: Optional[bool] = None
    equality: Optional[bool] = None
    via_upper_bound: bool = False
    inputs: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        if self.holds is None:
            return "indeterminate"
        if not self.holds:
            return "violation"
        return "equality" if self.equality else "holds"

    @property
    def slack(self) -> Optional[float]:
        """Float distance from the bound, for plotting only."""
        if self.holds is None or isinstance(self.lhs, AtLeast):
            return None
        try:
            lo, hi = float(self.lhs), float(self.rhs)
        except (TypeError, ValueError):
            return None
        return hi - lo if self.relation == "<=" else lo - hi

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "status": self.status,
            "applicable": self.applicable,
            "reason": self.reason,
            "relation": f"{self.lhs_symbol} {self.relation} rhs" if self.lhs_symbol else self.relation,
            "lhs": as_json_number(self.lhs),
            "rhs": as_json_number(self.rhs),
            "rhs_display": display(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "via_upper_bound": self.via_upper_bound,
            "inputs": self.inputs,
        }


def _decide(v: BoundVerdict) -> BoundVerdict:
    lhs, rhs = v.lhs, v.rhs
    if lhs is None:
        return v
    if isinstance(lhs, AtLeast):
        # Only a lower bound on lhs: can refute "<=" but never confirm it.
        if v.relation == "<=" and compare(lhs.value, rhs) > 0:
            v.holds, v.equality = False, False
        return v
    c = compare(lhs, rhs)
    v.holds = c <= 0 if v.relation == "<=" else c >= 0
    v.equality = c == 0
    return v


THEOREMS = (
    "T3.1(i)",
    "T3.1(ii)",
    "T3.2(1)",
    "T3.2(2)",
    "T3.3",
    "T4.1(i)",
    "T4.1(ii)",
    "T4.2(i)",
    "T4.2(ii)",
    "T4.2(ii-tf)",
    "T4.2(iii)",
    "T4.2(iii-tf)",
    "T4.2(iv)",
    "T4.2(v)",
    "T4.2(v-relaxed)",
    "T4.3",
    "T4.4",
)


def expand_theorem_ids(ids) -> list[str]:
    """Accept exact ids or prefixes such as ``T3.1`` or ``T4``."""
    out = []
    for tid in ids:
        matches = [t for t in THEOREMS if t == tid or t.startswith(tid + "(") or t.startswith(tid + ".")]
        if tid in ("T3", "T4"):
            matches = [t for t in THEOREMS if t.startswith(tid + ".")]
        if not matches:
            raise KeyError(f"unknown theorem id {tid!r}; known: {', '.join(THEOREMS)}")
        out.extend(t for t in matches if t not in out)
    return out


def _missing(ctx: BoundContext, names) -> Optional[str]:
    for name in names:
        if getattr(ctx, name) is None:
            return name
    return None


def _na(tid: str, reason: str, ctx: BoundContext) -> BoundVerdict:
    return BoundVerdict(tid, False, reason, inputs=ctx.echo())


def _lhs_or_unknown(v: BoundVerdict, ctx: BoundContext, symbols) -> BoundVerdict:
    """Fill v.lhs from ctx (max over ``symbols``), then decide."""
    vals = [getattr(ctx, s) for s in symbols]
    if any(x is None for x in vals):
        missing = [s for s, x in zip(symbols, vals) if x is None]
        if any(s in ctx.unknown for s in missing):
            v.reason += f"; {', '.join(missing)} not computed within budget"
        else:
            v.reason += f"; lhs {', '.join(missing)} not supplied"
        lower = [x.value if isinstance(x, AtLeast) else x for x in vals if x is not None]
        if lower:
            v.lhs = AtLeast(max(lower, key=float))
            return _decide(v)
        return v
    if any(isinstance(x, AtLeast) for x in vals):
        lower = max((x.value if isinstance(x, AtLeast) else x for x in vals), key=float)
        v.lhs = AtLeast(lower)
    else:
        v.lhs = max(vals, key=float) if len(vals) > 1 else vals[0]
    return _decide(v)


def _surface_checks(tid: str, ctx: BoundContext) -> Optional[BoundVerdict]:
    if ctx.chi is None:
        return _na(tid, "missing chi", ctx)
    if ctx.chi > 2:
        return _na(tid, f"chi={ctx.chi} exceeds 2; no such surface", ctx)
    if ctx.m is not None and ctx.n is not None and ctx.chi < ctx.n - ctx.m + 1:
        return _na(tid, "chi < n - m + 1: no 2-cell embedding can exist", ctx)
    if ctx.chi == 2 and ctx.planar is False:
        return _na(tid, "chi = 2 but the graph is not planar", ctx)
    return None


def _domination_surface(tid: str, ctx: BoundContext) -> BoundVerdict:
    symbol, threshold = {
        "T3.1": ("gamma_t", 5),
        "T3.2": ("gamma_w", 4),
        "T3.3": ("gamma_c", 3),
    }[tid.split("(")[0]]
    miss = _missing(ctx, ["n", symbol])
    if miss:
        if miss in ctx.unknown:
            return BoundVerdict(tid, True, f"{miss} not computed within budget", inputs=ctx.echo())
        return _na(tid, f"missing {miss}", ctx)
    if ctx.connected is False:
        return _na(tid, "graph is disconnected", ctx)
    gamma = getattr(ctx, symbol)
    if gamma < threshold:
        return _na(tid, f"{symbol}={gamma} < {threshold}", ctx)
    bad = _surface_checks(tid, ctx)
    if bad:
        return bad
    n, chi = ctx.n, ctx.chi
    v = BoundVerdict(tid, True, f"{symbol} >= {threshold}", via_upper_bound=not ctx.chi_exact, inputs=ctx.echo())
    if tid == "T3.1(i)":
        half = -(-gamma // 2)
        v.relation, v.lhs_symbol, v.lhs = ">=", "n", n
        v.rhs = Surd(2 * gamma + 1, 1, 9 + 8 * (half - chi), 2)
    elif tid == "T3.1(ii)":
        alpha = 2 if gamma % 2 == 0 else 3
        v.lhs_symbol, v.lhs = symbol, gamma
        v.rhs = Surd(n, -1, n + alpha - 2 * chi, 1)
        v.reason += f"; {'even' if alpha == 2 else 'odd'} gamma_t uses n+{alpha}-2chi"
    elif tid == "T3.2(1)":
        v.relation, v.lhs_symbol, v.lhs = ">=", "n", n
        v.rhs = Surd(2 * gamma + 1, 1, 9 + 8 * gamma - 8 * chi, 2)
    elif tid == "T3.2(2)":
        v.lhs_symbol, v.lhs = symbol, gamma
        v.rhs = Surd(2 * n + 1, -1, 8 * n + 9 - 8 * chi, 2)
    else:
        v.lhs_symbol, v.lhs = symbol, gamma
        v.rhs = Surd(2 * n - 1, -1, 17 - 8 * chi, 2)
    return _decide(v)


def _genus_terms(ctx: BoundContext, orient_fn, nonorient_fn):
    terms, inexact = [], False
    g = ctx.orientable_genus
    g_exact = ctx.orientable_genus_exact
    if g is None and ctx.planar:
        g, g_exact = 0, True
    if g is not None:
        terms.append(orient_fn(g))
        inexact |= not g_exact
    if ctx.nonorientable_genus is not None and ctx.nonorientable_genus >= 1:
        terms.append(nonorient_fn(ctx.nonorientable_genus))
        inexact |= not ctx.nonorientable_genus_exact
    return terms, inexact


def _lambda_br(tid: str, ctx: BoundContext) -> BoundVerdict:
    miss = _missing(ctx, ["min_degree"])
    if miss:
        return _na(tid, f"missing {miss}", ctx)
    if ctx.connected is False or (ctx.n is not None and ctx.n < 2):
        return _na(tid, "requires a nontrivial connected graph", ctx)
    if ctx.min_degree < 3:
        return _na(tid, f"minimum degree {ctx.min_degree} < 3", ctx)
    tf = tid == "T4.1(ii)"
    if tf:
        if ctx.triangle_free is None:
            return _na(tid, "missing triangle_free", ctx)
        if not ctx.triangle_free:
            return _na(tid, "graph contains a 3-cycle", ctx)
    terms, inexact = _genus_terms(ctx, h2 if tf else h1, k2 if tf else k1)
    if not terms:
        return _na(tid, "missing orientable or non-orientable genus", ctx)
    v = BoundVerdict(
        tid, True, "delta >= 3" + ("; triangle-free" if tf else ""),
        lhs_symbol="max(lambda_prime, b_r)", rhs=min(terms) - 2,
        via_upper_bound=inexact, inputs=ctx.echo(),
    )
    return _lhs_or_unknown(v, ctx, ["lambda_prime", "b_r"])


def _btr(tid: str, ctx: BoundContext) -> BoundVerdict:
    miss = _missing(ctx, ["min_degree", "max_degree"])
    if miss:
        return _na(tid, f"missing {miss}", ctx)
    if ctx.connected is False:
        return _na(tid, "graph is disconnected", ctx)
    if ctx.min_degree < 4:
        return _na(tid, f"minimum degree {ctx.min_degree} < 4", ctx)
    delta_max = ctx.max_degree
    v = BoundVerdict(tid, True, "delta >= 4", lhs_symbol="b_tr", inputs=ctx.echo())
    if tid == "T4.2(i)":
        if ctx.xi is None:
            return _na(tid, "missing xi", ctx)
        v.rhs = ctx.xi + delta_max - 2
    elif tid in ("T4.2(ii)", "T4.2(ii-tf)", "T4.2(iii)", "T4.2(iii-tf)"):
        tf = tid.endswith("-tf)")
        if tf:
            if ctx.triangle_free is None:
                return _na(tid, "missing triangle_free", ctx)
            if not ctx.triangle_free:
                return _na(tid, "graph contains a 3-cycle", ctx)
            v.reason += "; triangle-free"
        if tid.startswith("T4.2(ii"):
            g, exact = ctx.orientable_genus, ctx.orientable_genus_exact
            if g is None and ctx.planar:
                g, exact = 0, True
            if g is None:
                return _na(tid, "missing orientable_genus", ctx)
            v.rhs = (h2 if tf else h1)(g) + delta_max - 4
        else:
            g, exact = ctx.nonorientable_genus, ctx.nonorientable_genus_exact
            if g is None or g < 1:
                return _na(tid, "missing nonorientable_genus (>= 1)", ctx)
            v.rhs = (k2 if tf else k1)(g) + delta_max - 4
        v.via_upper_bound = not exact
    elif tid == "T4.2(iv)":
        if ctx.average_degree is None:
            return _na(tid, "missing average_degree", ctx)
        v.rhs = 2 * Fraction(ctx.average_degree) + delta_max - 4
    else:
        miss = _missing(ctx, ["n", "girth", "chi"])
        if miss:
            return _na(tid, f"missing {miss}", ctx)
        if ctx.girth == math.inf:
            return _na(tid, "girth is infinite", ctx)
        if ctx.chi > 2:
            return _na(tid, f"chi={ctx.chi} exceeds 2", ctx)
        v.via_upper_bound = not ctx.chi_exact
        if tid == "T4.2(v)":
            v.rhs = 2 * average_degree_ceiling(int(ctx.girth), ctx.chi, ctx.n) + delta_max - 4
        else:
            v.rhs = Fraction(-12 * ctx.chi, ctx.n) + delta_max + 8
    return _lhs_or_unknown(v, ctx, ["b_tr"])


def _planar_constant(tid: str, ctx: BoundContext) -> BoundVerdict:
    miss = _missing(ctx, ["planar", "min_degree"])
    if miss:
        return _na(tid, f"missing {miss}", ctx)
    if not ctx.planar:
        return _na(tid, "graph is not planar", ctx)
    if tid == "T4.3":
        if ctx.min_degree not in (4, 5):
            return _na(tid, f"minimum degree {ctx.min_degree} not in {{4, 5}}", ctx)
        i = ctx.min_degree - 4
        v = BoundVerdict(tid, True, f"planar, delta = 4 + {i}", lhs_symbol="b_tr", rhs=14 - i, inputs=ctx.echo())
        return _lhs_or_unknown(v, ctx, ["b_tr"])
    if ctx.min_degree != 5:
        return _na(tid, f"minimum degree {ctx.min_degree} != 5", ctx)
    v = BoundVerdict(tid, True, "planar, delta = 5", lhs_symbol="b_R", rhs=14, inputs=ctx.echo())
    return _lhs_or_unknown(v, ctx, ["b_R"])


def theorem_bound(theorem_id: str, ctx: BoundContext) -> BoundVerdict:
    """Evaluate one bound on the supplied context.

    A missing hypothesis symbol gives a not-applicable verdict naming it; a
    missing left-hand side leaves the verdict indeterminate with the
    right-hand side still computed.
    """
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    if theorem_id.startswith("T3"):
        return _domination_surface(theorem_id, ctx)
    if theorem_id.startswith("T4.1"):
        return _lambda_br(theorem_id, ctx)
    if theorem_id.startswith("T4.2"):
        return _btr(theorem_id, ctx)
    return _planar_constant(theorem_id, ctx)


def with_surface(ctx: BoundContext, surface: SurfaceSpec, is_genus: bool = False) -> BoundContext:
    """Context for a graph 2-cell embedded on ``surface``.

    chi is taken as exact. The surface genus bounds the graph's genus from
    above; pass ``is_genus=True`` when it is known to be the genus itself.
    """
    upd = {"chi": surface.chi, "chi_exact": True}
    if surface.orientable:
        upd.update(orientable_genus=surface.genus, orientable_genus_exact=is_genus)
    else:
        upd.update(nonorientable_genus=surface.genus, nonorientable_genus_exact=is_genus)
    return replace(ctx, **upd)
