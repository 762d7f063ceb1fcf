"""Immutable simple graphs on dense vertex labels ``0..n-1``.

Every structural query used by the solvers and bound evaluators lives here.
Adjacency is kept both as an edge set (for I/O and equality) and as
per-vertex bitmasks (for the exhaustive searches).
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Optional

import networkx as nx

#: Largest vertex count accepted by :class:`Graph`; vertex sets must fit a machine word.
MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex/edge arguments."""


Edge = tuple[int, int]


def _norm_edge(e) -> Edge:
    u, v = e
    u, v = int(u), int(v)
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class DegreeSummary:
    min_degree: int
    max_degree: int
    average_degree: Optional[Fraction]  # None for the empty graph
    min_edge_degree: Optional[int]  # None for edgeless graphs


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. Construct with ``Graph(n, edges)``.

    Edges are normalised to ``(u, v)`` with ``u < v``. Loops, duplicate
    edges and labels outside ``0..n-1`` raise :class:`GraphError`.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        if self.n > MAX_VERTICES:
            raise GraphError(f"n={self.n} exceeds the vertex cap {MAX_VERTICES}")
        raw = list(self.edges)
        norm = set()
        for e in raw:
            u, v = _norm_edge(e)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u < 0 or v >= self.n:
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if (u, v) in norm:
                raise GraphError(f"duplicate edge ({u}, {v})")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order."""
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Open neighbourhood of each vertex as a bitmask."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return mask_to_list(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge((u, v)) in self.edges

    def degree_summary(self) -> DegreeSummary:
        if self.n == 0:
            return DegreeSummary(0, 0, None, None)
        degs = self.degrees
        xi = None
        if self.edges:
            xi = min(degs[u] + degs[v] - 2 for u, v in self.edges)
        return DegreeSummary(min(degs), max(degs), Fraction(2 * self.m, self.n), xi)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def min_edge_degree(self) -> Optional[int]:
        """Minimum over edges xy of deg(x) + deg(y) - 2, or None if edgeless."""
        return self.degree_summary().min_edge_degree

    def average_degree(self) -> Optional[Fraction]:
        return self.degree_summary().average_degree

    def has_isolated_vertex(self) -> bool:
        return any(d == 0 for d in self.degrees)

    # -- structure -------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = _reach(self.adj, 1 << s, self.full_mask)
            seen |= comp
            comps.append(mask_to_list(comp))
        return comps

    def is_connected(self) -> bool:
        """True iff the graph has at most one component (n = 0 counts as connected)."""
        if self.n <= 1:
            return True
        return _reach(self.adj, 1, self.full_mask) == self.full_mask

    @cached_property
    def girth(self) -> float | int:
        """Length of a shortest cycle; ``math.inf`` for forests."""
        best = math.inf
        adj = [mask_to_list(a) for a in self.adj]
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            q = deque([s])
            while q:
                u = q.popleft()
                if 2 * dist[u] + 1 >= best:
                    break
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        q.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def has_triangle(self) -> bool:
        adj = self.adj
        return any(adj[u] & adj[v] for u, v in self.edges)

    def is_star(self) -> bool:
        """K_{1,k} for some k >= 0; the single vertex is K_{1,0}."""
        if self.n == 0:
            return False
        if self.m != self.n - 1:
            return False
        if self.n <= 2:
            return True
        return self.max_degree == self.n - 1

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_planar(self) -> bool:
        if self.n >= 3 and self.m > 3 * self.n - 6:
            return False
        planar, _ = nx.check_planarity(self.to_networkx())
        return planar

    def edge_connectivity(self) -> int:
        """Minimum number of edges whose removal disconnects the graph."""
        if self.n < 2:
            raise GraphError("edge connectivity needs at least two vertices")
        if not self.is_connected():
            return 0
        return nx.edge_connectivity(self.to_networkx())

    # -- derived graphs --------------------------------------------------

    def remove_edges(self, removed: Iterable) -> "Graph":
        removed = {_norm_edge(e) for e in removed}
        missing = removed - self.edges
        if missing:
            raise GraphError(f"edges not in graph: {sorted(missing)}")
        return Graph(self.n, self.edges - removed)

    def add_edges(self, added: Iterable) -> "Graph":
        added = {_norm_edge(e) for e in added}
        clash = added & self.edges
        if clash:
            raise GraphError(f"edges already present: {sorted(clash)}")
        return Graph(self.n, self.edges | added)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph relabelled to ``0..|U|-1``.

        Returns the subgraph and the map from original to new labels.
        """
        keep = sorted(set(int(v) for v in vertices))
        for v in keep:
            self._check_vertex(v)
        label = {v: i for i, v in enumerate(keep)}
        edges = [(label[u], label[v]) for u, v in self.edges if u in label and v in label]
        return Graph(len(keep), edges), label

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        sub, _ = self.induced(v for v in range(self.n) if v not in drop)
        return sub

    # -- 3-vertex paths --------------------------------------------------

    def paths3(self) -> Iterable[tuple[int, int, int]]:
        """All ordered paths x-y-z on distinct vertices, in lexicographic order."""
        adj = self.adj
        for x in range(self.n):
            for y in mask_to_list(adj[x]):
                for z in mask_to_list(adj[y] & ~(1 << x)):
                    yield (x, y, z)

    def min_path3_degree_sum(
        self, constraint: Optional[Callable[["Graph", tuple[int, int, int]], bool]] = None
    ) -> Optional[tuple[tuple[int, int, int], int]]:
        """Path x-y-z minimising deg(x)+deg(y)+deg(z), ties broken lexicographically.

        ``constraint(G, (x, y, z))`` filters candidate paths. Returns
        ``((x, y, z), sum)`` or None when no path qualifies.
        """
        degs = self.degrees
        best = None
        for p in self.paths3():
            s = degs[p[0]] + degs[p[1]] + degs[p[2]]
            if best is not None and s >= best[1]:
                continue
            if constraint is None or constraint(self, p):
                best = (p, s)
        return best

    def has_path3_of_type(self, i: int, j: int, k: int) -> bool:
        return self.find_path3_of_type(i, j, k) is not None

    def find_path3_of_type(self, i: int, j: int, k: int) -> Optional[tuple[int, int, int]]:
        degs = self.degrees
        for x, y, z in self.paths3():
            if degs[x] <= i and degs[y] <= j and degs[z] <= k:
                return (x, y, z)
        return None

    # -- conversion ------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edge_list)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        label = {v: i for i, v in enumerate(sorted(g.nodes))}
        return cls(len(label), [(label[u], label[v]) for u, v in g.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edge_list)})"


def tb_constraint(g: Graph, path: tuple[int, int, int]) -> bool:
    """deg(x) > 1, deg(z) > 1 and G - {x, y, z} has no isolated vertex."""
    x, y, z = path
    degs = g.degrees
    if degs[x] <= 1 or degs[z] <= 1:
        return False
    rest = g.full_mask & ~((1 << x) | (1 << y) | (1 << z))
    adj = g.adj
    for v in mask_to_list(rest):
        if not adj[v] & rest:
            return False
    return True


# -- bit helpers ----------------------------------------------------------


def mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def list_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _reach(adj: tuple[int, ...] | list[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside ``allowed`` (bitmasks)."""
    seen = start & allowed
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & allowed & ~seen
        seen |= new
        frontier |= new
    return seen


# -- named graphs ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def icosahedron() -> Graph:
    return Graph.from_networkx(nx.icosahedral_graph())


def cube_graph() -> Graph:
    return Graph.from_networkx(nx.hypercube_graph(3))


def octahedron() -> Graph:
    return Graph.from_networkx(nx.octahedral_graph())
