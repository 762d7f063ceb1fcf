"""Exact domination-type parameters and restricted edge connectivity.

All solvers are exhaustive: vertex subsets are scanned by increasing
cardinality (lexicographic within a cardinality) so the first valid set is a
minimum and the witness is deterministic.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Graph, GraphError, _reach, list_to_mask, mask_to_list

DEFAULT_BUDGET = 10**7


class NotApplicable(ValueError):
    """The requested quantity is undefined for this graph."""


class BudgetExceeded(RuntimeError):
    """The search hit its node budget before finishing."""

    def __init__(self, message: str, examined: int, reached: int):
        super().__init__(message)
        self.examined = examined
        self.reached = reached


class ParameterKind(enum.Enum):
    DOMINATION = "domination"
    TOTAL = "total"
    CONNECTED = "connected"
    WEAKLY_CONNECTED = "weakly-connected"
    RESTRAINED = "restrained"
    TOTAL_RESTRAINED = "total-restrained"
    ROMAN = "roman"
    RESTRICTED_EDGE_CONN = "restricted-edge-connectivity"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    ParameterKind.DOMINATION: "gamma",
    ParameterKind.TOTAL: "gamma_t",
    ParameterKind.CONNECTED: "gamma_c",
    ParameterKind.WEAKLY_CONNECTED: "gamma_w",
    ParameterKind.RESTRAINED: "gamma_r",
    ParameterKind.TOTAL_RESTRAINED: "gamma_tr",
    ParameterKind.ROMAN: "gamma_R",
    ParameterKind.RESTRICTED_EDGE_CONN: "lambda_prime",
}

SET_KINDS = (
    ParameterKind.DOMINATION,
    ParameterKind.TOTAL,
    ParameterKind.CONNECTED,
    ParameterKind.WEAKLY_CONNECTED,
    ParameterKind.RESTRAINED,
    ParameterKind.TOTAL_RESTRAINED,
)

Witness = Union[frozenset, tuple]


@dataclass(frozen=True)
class ParameterCertificate:
    """Minimum value of ``kind`` on a graph plus a witness achieving it.

    ``witness`` is a vertex set for the set-valued kinds, a labelling tuple
    for ROMAN and an edge set (the cut) for RESTRICTED_EDGE_CONN.
    """

    kind: ParameterKind
    value: int
    witness: Witness
    cardinality_reached: int
    examined: int
    side: Optional[frozenset] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        if self.kind is ParameterKind.ROMAN:
            witness = list(self.witness)
        else:
            witness = sorted(list(w) if isinstance(w, tuple) else w for w in self.witness)
        d = {
            "kind": self.kind.value,
            "value": self.value,
            "witness": witness,
            "search": {"cardinality_reached": self.cardinality_reached, "examined": self.examined},
        }
        if self.side is not None:
            d["side"] = sorted(self.side)
        return d


def applicability(g: Graph, kind: ParameterKind) -> Optional[str]:
    """Reason ``kind`` is undefined on ``g``, or None when it is defined."""
    if g.n == 0:
        return "empty graph"
    if kind in (ParameterKind.TOTAL, ParameterKind.TOTAL_RESTRAINED) and g.has_isolated_vertex():
        return "graph has an isolated vertex"
    if kind in (ParameterKind.CONNECTED, ParameterKind.WEAKLY_CONNECTED) and not g.is_connected():
        return "graph is disconnected"
    if kind is ParameterKind.RESTRICTED_EDGE_CONN:
        if not g.is_connected():
            return "graph is disconnected"
        if g.n < 4:
            return "no restricted edge-cut exists on fewer than four vertices"
        if g.is_star():
            return "no restricted edge-cut exists in a star"
    return None


# -- validity predicates (bitmask form) --------------------------------------


def _union(adj, mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= adj[low.bit_length() - 1]
        mask ^= low
    return out


def _outside_has_outside_neighbor(adj, s: int, full: int) -> bool:
    rest = full & ~s
    m = rest
    while m:
        low = m & -m
        if not adj[low.bit_length() - 1] & rest:
            return False
        m ^= low
    return True


def _set_valid(g: Graph, kind: ParameterKind, s: int) -> bool:
    return set_valid_masks(g.adj, g.full_mask, kind, s)


def set_valid_masks(adj, full: int, kind: ParameterKind, s: int) -> bool:
    """Validity of vertex set ``s`` for ``kind`` given raw adjacency masks."""
    if kind is ParameterKind.TOTAL or kind is ParameterKind.TOTAL_RESTRAINED:
        if _union(adj, s) != full:
            return False
        return kind is ParameterKind.TOTAL or _outside_has_outside_neighbor(adj, s, full)
    if (_union(adj, s) | s) != full:
        return False
    if kind is ParameterKind.DOMINATION:
        return True
    if kind is ParameterKind.RESTRAINED:
        return _outside_has_outside_neighbor(adj, s, full)
    if kind is ParameterKind.CONNECTED:
        return s != 0 and _reach(adj, s & -s, s) == s
    if kind is ParameterKind.WEAKLY_CONNECTED:
        return s != 0 and _weak_reach(adj, s, full) == full
    raise ValueError(f"{kind} is not a vertex-set parameter")


def _weak_reach(adj, s: int, full: int) -> int:
    # Spanning subgraph keeping only edges with an endpoint in s.
    seen = s & -s
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = low.bit_length() - 1
        nbrs = adj[v] if s >> v & 1 else adj[v] & s
        new = nbrs & full & ~seen
        seen |= new
        frontier |= new
    return seen


def _roman_value(g: Graph, v2: int) -> int:
    return roman_value_masks(g.adj, g.full_mask, v2)


def roman_value_masks(adj, full: int, v2: int) -> int:
    """Least weight of an RDF whose 2-labelled set is ``v2``."""
    dominated = _union(adj, v2) | v2
    return 2 * v2.bit_count() + (full & ~dominated).bit_count()


def _roman_labelling(g: Graph, v2: int) -> tuple[int, ...]:
    dominated = _union(g.adj, v2) | v2
    return tuple(2 if v2 >> v & 1 else (0 if dominated >> v & 1 else 1) for v in range(g.n))


def _is_restricted_cut(g: Graph, cut) -> bool:
    rest = g.remove_edges(cut)
    return not rest.is_connected() and not rest.has_isolated_vertex()


def is_valid(g: Graph, kind: ParameterKind, witness) -> bool:
    """Check ``witness`` against the definition of ``kind`` on ``g``."""
    if kind is ParameterKind.ROMAN:
        labels = tuple(witness)
        if len(labels) != g.n or any(lab not in (0, 1, 2) for lab in labels):
            raise GraphError("ROMAN witness must label every vertex with 0, 1 or 2")
        twos = list_to_mask(v for v, lab in enumerate(labels) if lab == 2)
        return all(lab != 0 or g.adj[v] & twos for v, lab in enumerate(labels))
    if kind is ParameterKind.RESTRICTED_EDGE_CONN:
        cut = set(witness)
        if not all(isinstance(e, tuple) and len(e) == 2 for e in cut):
            raise GraphError("RESTRICTED_EDGE_CONN witness must be a set of edges")
        if not {(min(e), max(e)) for e in cut} <= g.edges:
            return False
        return _is_restricted_cut(g, cut)
    verts = set(witness)
    if not all(isinstance(v, int) and 0 <= v < g.n for v in verts):
        raise GraphError(f"{kind.value} witness must be a set of vertices of the graph")
    return _set_valid(g, kind, list_to_mask(verts))


def roman_weight(g: Graph, labelling) -> int:
    labels = tuple(labelling)
    if len(labels) != g.n or any(lab not in (0, 1, 2) for lab in labels):
        raise GraphError("labelling must assign 0, 1 or 2 to every vertex")
    return sum(labels)


# -- solvers ----------------------------------------------------------------


def iter_vertex_subsets(n: int, k: int):
    """k-subsets of range(n) as bitmasks, lexicographic by vertex tuple."""
    bits = [1 << v for v in range(n)]
    for combo in itertools.combinations(bits, k):
        yield sum(combo)


def _solve_set(g: Graph, kind: ParameterKind, budget: int) -> ParameterCertificate:
    examined = 0
    # n >= 1 here, so the empty set is never valid.
    for k in range(1, g.n + 1):
        for s in iter_vertex_subsets(g.n, k):
            examined += 1
            if examined > budget:
                raise BudgetExceeded(
                    f"{kind.value}: budget {budget} exhausted at cardinality {k}", examined, k
                )
            if _set_valid(g, kind, s):
                return ParameterCertificate(kind, k, frozenset(mask_to_list(s)), k, examined)
    raise AssertionError(f"no valid {kind.value} set found")  # V(G) is always valid here


def _solve_roman(g: Graph, budget: int) -> ParameterCertificate:
    best_val, best_v2 = g.n, 0  # all-ones labelling
    examined = 1
    reached = 0
    for k in range(1, g.n + 1):
        if 2 * k >= best_val:
            break
        reached = k
        for v2 in iter_vertex_subsets(g.n, k):
            examined += 1
            if examined > budget:
                raise BudgetExceeded(f"roman: budget {budget} exhausted at |V2|={k}", examined, k)
            val = _roman_value(g, v2)
            if val < best_val:
                best_val, best_v2 = val, v2
    return ParameterCertificate(
        ParameterKind.ROMAN, best_val, _roman_labelling(g, best_v2), reached, examined
    )


def _cut_size(adj, x: int, full: int) -> int:
    out = full & ~x
    total = 0
    m = x
    while m:
        low = m & -m
        total += (adj[low.bit_length() - 1] & out).bit_count()
        m ^= low
    return total


def _no_isolated_inside(adj, side: int) -> bool:
    m = side
    while m:
        low = m & -m
        if not adj[low.bit_length() - 1] & side:
            return False
        m ^= low
    return True


def _solve_lambda_prime(g: Graph, budget: int) -> ParameterCertificate:
    adj, full = g.adj, g.full_mask
    best = None
    examined = 0
    # X always contains vertex 0; X ranges over all proper supersets of {0}.
    for rest in range(0, 1 << (g.n - 1)):
        x = (rest << 1) | 1
        if x == full:
            continue
        examined += 1
        if examined > budget:
            raise BudgetExceeded(f"lambda': budget {budget} exhausted", examined, 0)
        if not _no_isolated_inside(adj, x) or not _no_isolated_inside(adj, full & ~x):
            continue
        size = _cut_size(adj, x, full)
        if best is None or size < best[0]:
            best = (size, x)
    if best is None:
        raise NotApplicable("graph has no restricted edge-cut")
    size, x = best
    cut = frozenset((min(u, v), max(u, v)) for u, v in g.edges if (x >> u & 1) != (x >> v & 1))
    return ParameterCertificate(
        ParameterKind.RESTRICTED_EDGE_CONN, size, cut, size, examined, side=frozenset(mask_to_list(x))
    )


def solve(g: Graph, kind: ParameterKind, budget: int = DEFAULT_BUDGET) -> ParameterCertificate:
    """Exact minimum of ``kind`` on ``g`` with a witness.

    Raises :class:`NotApplicable` when the parameter is undefined on ``g`` and
    :class:`BudgetExceeded` when more than ``budget`` candidates would be
    examined; neither case ever yields a value.
    """
    kind = ParameterKind(kind)
    reason = applicability(g, kind)
    if reason is not None:
        raise NotApplicable(f"{kind.value}: {reason}")
    if kind is ParameterKind.ROMAN:
        return _solve_roman(g, budget)
    if kind is ParameterKind.RESTRICTED_EDGE_CONN:
        return _solve_lambda_prime(g, budget)
    return _solve_set(g, kind, budget)


def lambda_prime_by_edge_subsets(g: Graph, max_size: Optional[int] = None) -> Optional[int]:
    """Restricted edge connectivity straight from the definition.

    Scans edge subsets S by increasing size for one where G - S is
    disconnected with no isolated vertex. Exponential in m; meant as an
    oracle for small graphs. Returns None when no such S exists.
    """
    edges = g.edge_list
    limit = len(edges) if max_size is None else max_size
    for k in range(limit + 1):
        for cut in itertools.combinations(edges, k):
            if _is_restricted_cut(g, cut):
                return k
    return None
