"""Seeded random graph corpora with rejection sampling."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph

CONSTRAINTS = ("connected", "triangle_free", "planar", "not_star", "no_isolated")
DEFAULT_MAX_ATTEMPTS = 10**5


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    """Parameters for :func:`random_corpus`.

    Give either an edge probability ``p`` or an edge-count range
    ``(m_min, m_max)``; ``min_degree`` adds a minimum-degree constraint.
    """

    count: int
    n_min: int
    n_max: int
    p: Optional[float] = None
    m_min: Optional[int] = None
    m_max: Optional[int] = None
    constraints: frozenset = field(default_factory=frozenset)
    min_degree: int = 0
    seed: int = 0
    max_attempts: int = DEFAULT_MAX_ATTEMPTS

    def __post_init__(self):
        object.__setattr__(self, "constraints", frozenset(self.constraints))
        unknown = self.constraints - set(CONSTRAINTS)
        if unknown:
            raise CorpusError(f"unknown constraints {sorted(unknown)}; choose from {CONSTRAINTS}")
        if self.count < 1:
            raise CorpusError("count must be positive")
        if not 0 <= self.n_min <= self.n_max:
            raise CorpusError("need 0 <= n_min <= n_max")
        if (self.p is None) == (self.m_min is None and self.m_max is None):
            raise CorpusError("give exactly one of p or an m range")
        if self.p is not None and not 0.0 <= self.p <= 1.0:
            raise CorpusError("p must lie in [0, 1]")
        if self.p is None:
            lo = self.m_min if self.m_min is not None else 0
            hi = self.m_max if self.m_max is not None else lo
            if lo > hi:
                raise CorpusError("need m_min <= m_max")
            if lo > self.n_max * (self.n_max - 1) // 2:
                raise CorpusError(
                    f"m >= {lo} is infeasible: at most {self.n_max * (self.n_max - 1) // 2} edges on {self.n_max} vertices"
                )
            object.__setattr__(self, "m_min", lo)
            object.__setattr__(self, "m_max", hi)


def _violated(g: Graph, spec: CorpusSpec) -> Optional[str]:
    c = spec.constraints
    if g.min_degree < spec.min_degree:
        return f"min_degree >= {spec.min_degree}"
    if "no_isolated" in c and g.has_isolated_vertex():
        return "no_isolated"
    if "connected" in c and not g.is_connected():
        return "connected"
    if "not_star" in c and g.is_star():
        return "not_star"
    if "triangle_free" in c and g.has_triangle():
        return "triangle_free"
    if "planar" in c and not g.is_planar():
        return "planar"
    return None


def _draw(rng: np.random.Generator, spec: CorpusSpec) -> Optional[Graph]:
    n = int(rng.integers(spec.n_min, spec.n_max + 1))
    pairs = list(itertools.combinations(range(n), 2))
    if spec.p is not None:
        keep = rng.random(len(pairs)) < spec.p
        return Graph(n, [e for e, k in zip(pairs, keep) if k])
    lo, hi = spec.m_min, min(spec.m_max, len(pairs))
    if lo > hi:
        return None
    m = int(rng.integers(lo, hi + 1))
    idx = rng.choice(len(pairs), size=m, replace=False)
    return Graph(n, [pairs[i] for i in idx])


def random_graph(spec: CorpusSpec, index: int) -> Graph:
    """The ``index``-th graph of the corpus; independent of the other indices."""
    rng = np.random.default_rng(np.random.SeedSequence(spec.seed, spawn_key=(index,)))
    tally: dict[str, int] = {}
    for _ in range(spec.max_attempts):
        g = _draw(rng, spec)
        if g is None:
            tally["edge count"] = tally.get("edge count", 0) + 1
            continue
        why = _violated(g, spec)
        if why is None:
            return g
        tally[why] = tally.get(why, 0) + 1
    worst = max(tally, key=tally.get)
    raise CorpusError(
        f"graph {index}: no sample satisfied the constraints after {spec.max_attempts} attempts "
        f"(most often unsatisfied: {worst}, {tally[worst]} times)"
    )


def random_corpus(spec: CorpusSpec) -> list[Graph]:
    return [random_graph(spec, i) for i in range(spec.count)]
