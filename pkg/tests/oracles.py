"""Independent brute-force reference implementations.

These work on plain Python sets and networkx, straight from the
definitions, and share no code with the bitmask solvers they check.
"""

import itertools

import networkx as nx


def nbrs(g, v):
    return {u for e in g.edges for u in e if v in e and u != v}


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def dominating(g, s):
    return all(v in s or nbrs(g, v) & s for v in range(g.n))


def total_dominating(g, s):
    return all(nbrs(g, v) & s for v in range(g.n))


def connected_dominating(g, s):
    if not s or not dominating(g, s):
        return False
    return nx.is_connected(to_nx(g).subgraph(s))


def weakly_connected_dominating(g, s):
    if not s:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(e for e in g.edges if e[0] in s or e[1] in s)
    return dominating(g, s) and nx.is_connected(h)


def restrained_dominating(g, s):
    out = set(range(g.n)) - s
    return dominating(g, s) and all(nbrs(g, v) & out for v in out)


def total_restrained_dominating(g, s):
    out = set(range(g.n)) - s
    return total_dominating(g, s) and all(nbrs(g, v) & out for v in out)


PREDICATES = {
    "domination": dominating,
    "total": total_dominating,
    "connected": connected_dominating,
    "weakly-connected": weakly_connected_dominating,
    "restrained": restrained_dominating,
    "total-restrained": total_restrained_dominating,
}


def min_set(g, kind):
    pred = PREDICATES[kind]
    for k in range(0, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            if pred(g, set(s)):
                return k
    return None


def exists_valid_of_size(g, kind, k):
    pred = PREDICATES[kind]
    return any(pred(g, set(s)) for s in itertools.combinations(range(g.n), k))


def is_rdf(g, f):
    return all(f[v] != 0 or any(f[u] == 2 for u in nbrs(g, v)) for v in range(g.n))


def roman(g):
    """Minimum RDF weight over all 3^n labellings."""
    best = None
    for f in itertools.product((0, 1, 2), repeat=g.n):
        if is_rdf(g, f):
            w = sum(f)
            if best is None or w < best:
                best = w
    return best


def param(g, kind):
    return roman(g) if kind == "roman" else min_set(g, kind)


def edge_connectivity(g):
    edges = sorted(g.edges)
    for k in range(len(edges) + 1):
        for cut in itertools.combinations(edges, k):
            h = to_nx(g)
            h.remove_edges_from(cut)
            if not nx.is_connected(h):
                return k
    return None


def bondage(g, kind, no_isolated=False, cap=None):
    """Smallest edge set raising the parameter; None if none of size <= cap does."""
    base = param(g, kind)
    edges = sorted(g.edges)
    cap = len(edges) if cap is None else cap
    for k in range(1, cap + 1):
        for rem in itertools.combinations(edges, k):
            h = type(g)(g.n, set(g.edges) - set(rem))
            if no_isolated and any(not nbrs(h, v) for v in range(h.n)):
                continue
            if param(h, kind) > base:
                return k
    return None


def restricted_edge_connectivity(g):
    """Smallest edge set whose removal disconnects g and isolates no vertex."""
    edges = sorted(g.edges)
    for k in range(len(edges) + 1):
        for cut in itertools.combinations(edges, k):
            h = to_nx(g)
            h.remove_edges_from(cut)
            if not nx.is_connected(h) and min(dict(h.degree).values()) > 0:
                return k
    return None
