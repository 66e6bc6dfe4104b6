"""Deterministic graph families for tests and benchmarks.

Every generator is a pure function of its parameters (plus seed), including
edge-id assignment, so a :class:`GeneratorSpec` fully determines the
resulting graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import GraphError, MultiGraph


def gen_tight_star(n: int) -> MultiGraph:
    """Doubled star with a loop per leaf: the family where the greedy
    sandwich is tight.

    Center is vertex 0, leaves are ``1..2n``.  Every center-leaf edge is
    doubled and each leaf carries one loop, so m = 6n and the cycle rank is
    4n.  The maximum genus is 2n: pairing each loop with a parallel edge at
    its leaf realises it, while pairing the central edges with each other
    yields only n disjoint removable pairs.
    """
    if n <= 0:
        raise GraphError(f"family parameter must be positive, got {n}")
    g = MultiGraph(2 * n + 1)
    for leaf in range(1, 2 * n + 1):
        g.add_edge(0, leaf)
        g.add_edge(0, leaf)
    for leaf in range(1, 2 * n + 1):
        g.add_edge(leaf, leaf)
    return g


def gen_random_connected_multigraph(
    n: int,
    m: int,
    *,
    loop_prob: float = 0.15,
    parallel_prob: float = 0.15,
    seed: int = 0,
    simple: bool = False,
) -> MultiGraph:
    """Random connected multigraph with exactly ``m`` edges.

    A random spanning tree is laid down first (vertex i attaches to a
    uniform earlier vertex), then ``m - n + 1`` extra edges are drawn: with
    ``loop_prob`` a loop at a random vertex, with ``parallel_prob`` a
    duplicate of a uniformly chosen existing edge, otherwise a uniform
    non-loop pair.  ``simple=True`` disables loops/parallels and resamples
    collisions instead.  Errors if ``m < n - 1`` (cannot connect).
    """
    if n < 1:
        raise GraphError("need at least one vertex")
    if m < n - 1:
        raise GraphError(f"m={m} cannot connect n={n} vertices")
    if simple and m > n * (n - 1) // 2:
        raise GraphError(f"m={m} exceeds simple-graph capacity for n={n}")
    rng = random.Random(seed)
    g = MultiGraph(n)
    for v in range(1, n):
        g.add_edge(rng.randrange(v), v)
    seen = {tuple(sorted(g.endpoints(e))) for e in g.edge_ids()}
    for _ in range(m - (n - 1)):
        if simple:
            while True:
                u = rng.randrange(n)
                v = rng.randrange(n)
                if u != v and tuple(sorted((u, v))) not in seen:
                    break
            seen.add(tuple(sorted((u, v))))
            g.add_edge(u, v)
            continue
        r = rng.random()
        if n == 1 or r < loop_prob:
            v = rng.randrange(n)
            g.add_edge(v, v)
        elif r < loop_prob + parallel_prob and g.n_edges > 0:
            eid = rng.choice(g.edge_ids())
            u, v = g.endpoints(eid)
            g.add_edge(u, v)
        else:
            u = rng.randrange(n)
            v = rng.randrange(n - 1)
            if v >= u:
                v += 1
            g.add_edge(u, v)
    return g


def gen_bouquet(k: int) -> MultiGraph:
    """One vertex with k loops; maximum genus is floor(k/2)."""
    if k < 0:
        raise GraphError("loop count must be non-negative")
    g = MultiGraph(1)
    for _ in range(k):
        g.add_edge(0, 0)
    return g


def gen_dipole(k: int) -> MultiGraph:
    """Two vertices joined by k parallel edges; maximum genus floor((k-1)/2)."""
    if k < 1:
        raise GraphError("dipole needs at least one edge")
    g = MultiGraph(2)
    for _ in range(k):
        g.add_edge(0, 1)
    return g


def gen_complete(n: int) -> MultiGraph:
    """Simple complete graph on n vertices."""
    if n < 1:
        raise GraphError("need at least one vertex")
    g = MultiGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


FAMILIES = ("tight-star", "random", "bouquet", "dipole", "complete")


@dataclass(frozen=True)
class GeneratorSpec:
    """Reproducible recipe for a generated graph.

    ``family`` is one of :data:`FAMILIES`; parameter meaning per family:
    tight-star uses ``n`` (the half-leaf count), random uses ``n``/``m``
    plus probabilities and seed, bouquet and dipole use ``k``, complete
    uses ``n``.  Identical specs build identical graphs, edge ids included.
    """

    family: str
    n: int | None = None
    m: int | None = None
    k: int | None = None
    seed: int = 0
    loop_prob: float = 0.15
    parallel_prob: float = 0.15

    def build(self) -> MultiGraph:
        if self.family == "tight-star":
            self._need("n")
            return gen_tight_star(self.n)
        if self.family == "random":
            self._need("n")
            self._need("m")
            return gen_random_connected_multigraph(
                self.n,
                self.m,
                loop_prob=self.loop_prob,
                parallel_prob=self.parallel_prob,
                seed=self.seed,
            )
        if self.family == "bouquet":
            self._need("k")
            return gen_bouquet(self.k)
        if self.family == "dipole":
            self._need("k")
            return gen_dipole(self.k)
        if self.family == "complete":
            self._need("n")
            return gen_complete(self.n)
        raise GraphError(
            f"unknown family {self.family!r}; known: {', '.join(FAMILIES)}"
        )

    def _need(self, name: str) -> None:
        if getattr(self, name) is None:
            raise GraphError(f"family {self.family!r} requires parameter {name}")
