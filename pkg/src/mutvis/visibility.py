"""Visibility predicates: pair visibility, mutual-visibility set checks, and
bypass vertices.

Two vertices x, y are visible past an obstacle set X when some shortest
x,y-path has no internal vertex in X (the endpoints themselves may belong to
X).  A set X is a mutual-visibility set when all pairs inside X are visible
past X, and a total mutual-visibility set when every pair of vertices of the
graph is.

The checks run as absorbing breadth-first searches over adjacency bitmasks:
obstacle vertices receive a distance when first reached but are never
expanded, so the search computes, for every target at once, the length of a
shortest path whose internal vertices avoid the obstacles.  A pair is
visible exactly when that restricted length equals the true distance.
"""

from __future__ import annotations

from itertools import combinations
from typing import AbstractSet

from .errors import GraphError
from .graph import DistanceMatrix, Graph, all_pairs_distances, _check_vertex, _check_vertex_set


class VisibilityOracle:
    """Per-graph bundle of the bitmask structures the visibility checks use.

    Construction computes the distance matrix (hence requires a connected
    graph), per-source distance-level masks, and adjacency masks.  All query
    methods take obstacle sets as plain bitmasks; the instance is read-only
    after construction.
    """

    __slots__ = ("graph", "n", "dist", "adj", "full", "above", "levels")

    def __init__(self, g: Graph):
        self.graph = g
        self.n = g.order
        self.dist = all_pairs_distances(g)
        self.adj = g.adjacency_masks()
        self.full = (1 << g.order) - 1
        self.above = tuple((self.full >> (u + 1)) << (u + 1) for u in range(g.order))
        levels = []
        for u in range(g.order):
            row = self.dist.row(u)
            lv = [0] * (max(row) + 1)
            for v, dv in enumerate(row):
                lv[dv] |= 1 << v
            levels.append(tuple(lv))
        self.levels = tuple(levels)

    @classmethod
    def for_graph(cls, g: Graph) -> "VisibilityOracle":
        oracle = g._cache.get("oracle")
        if oracle is None:
            oracle = cls(g)
            g._cache["oracle"] = oracle
        return oracle

    # -- single-source engine ------------------------------------------------

    def _first_blocked_target(self, src: int, obstacles: int, targets: int) -> int:
        """Lowest target whose restricted distance from src exceeds the true
        one, or -1 when every target stays visible.  Obstacles absorb: they
        are reached but not expanded; the source always expands."""
        adj = self.adj
        levels = self.levels[src]
        depth = len(levels)
        reached = 1 << src
        frontier = reached
        pending = targets & ~reached
        k = 0
        while pending:
            expand = frontier if k == 0 else frontier & ~obstacles
            k += 1
            nxt = 0
            while expand:
                low = expand & -expand
                nxt |= adj[low.bit_length() - 1]
                expand &= expand - 1
            nxt &= ~reached
            if not nxt:
                miss = pending
                return (miss & -miss).bit_length() - 1
            reached |= nxt
            if k < depth:
                miss = levels[k] & pending & ~reached
                if miss:
                    return (miss & -miss).bit_length() - 1
            pending &= ~reached
            frontier = nxt
        return -1

    def pair_visible(self, x: int, y: int, obstacles: int) -> bool:
        """Some shortest x,y-path has all internal vertices outside obstacles."""
        adj = self.adj
        target_level = self.dist.row(x)[y]
        reached = 1 << x
        frontier = reached
        for k in range(target_level):
            expand = frontier if k == 0 else frontier & ~obstacles
            nxt = 0
            while expand:
                low = expand & -expand
                nxt |= adj[low.bit_length() - 1]
                expand &= expand - 1
            nxt &= ~reached
            if not nxt:
                return False
            reached |= nxt
            frontier = nxt
        return bool(reached >> y & 1)

    # -- set checks ------------------------------------------------------------

    def tmv_holds(self, obstacles: int) -> bool:
        if obstacles == 0:
            return True
        for src in range(self.n - 1):
            if self._first_blocked_target(src, obstacles, self.above[src]) >= 0:
                return False
        return True

    def tmv_violation(self, obstacles: int) -> tuple[int, int] | None:
        for src in range(self.n - 1):
            y = self._first_blocked_target(src, obstacles, self.above[src])
            if y >= 0:
                return (src, y)
        return None

    def mv_holds(self, members: int) -> bool:
        rem = members
        while rem:
            low = rem & -rem
            rem &= rem - 1
            src = low.bit_length() - 1
            targets = members & self.above[src]
            if not targets:
                break
            if self._first_blocked_target(src, members, targets) >= 0:
                return False
        return True

    def mv_violation(self, members: int) -> tuple[int, int] | None:
        rem = members
        while rem:
            low = rem & -rem
            rem &= rem - 1
            src = low.bit_length() - 1
            targets = members & self.above[src]
            if not targets:
                break
            y = self._first_blocked_target(src, members, targets)
            if y >= 0:
                return (src, y)
        return None

    # -- conflict cores ----------------------------------------------------------

    def minimal_pair_blocker(self, obstacles: int, x: int, y: int) -> int:
        """Shrink obstacles to an inclusion-minimal set still blocking (x, y)."""
        core = obstacles & ~((1 << x) | (1 << y))
        rem = core
        while rem:
            low = rem & -rem
            rem &= rem - 1
            if not self.pair_visible(x, y, core & ~low):
                core &= ~low
        return core

    def minimal_tmv_blocker(self, obstacles: int) -> int:
        pair = self.tmv_violation(obstacles)
        if pair is None:
            return 0
        return self.minimal_pair_blocker(obstacles, *pair)

    def minimal_mv_blocker(self, members: int) -> int:
        pair = self.mv_violation(members)
        if pair is None:
            return 0
        x, y = pair
        return self.minimal_pair_blocker(members, x, y) | (1 << x) | (1 << y)


def _mask(s: AbstractSet[int]) -> int:
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


# -- public predicates ------------------------------------------------------


def is_pair_visible(g: Graph, d: DistanceMatrix, x: int, y: int, obstacles: AbstractSet[int]) -> bool:
    """True iff some shortest x,y-path avoids ``obstacles`` internally.

    x and y themselves may belong to the obstacle set; only internal path
    vertices count.  ``d`` must be the distance matrix of ``g``.
    """
    _check_vertex(g, x)
    _check_vertex(g, y)
    if x == y:
        raise GraphError("pair visibility needs two distinct vertices")
    if d.order != g.order:
        raise GraphError("distance matrix does not match the graph")
    fs = _check_vertex_set(g, obstacles)
    return VisibilityOracle.for_graph(g).pair_visible(x, y, _mask(fs))


def is_total_mv_set(g: Graph, x: AbstractSet[int]) -> bool:
    """True iff every pair of vertices of g is visible past x."""
    fs = _check_vertex_set(g, x)
    return VisibilityOracle.for_graph(g).tmv_holds(_mask(fs))


def total_mv_violation(g: Graph, x: AbstractSet[int]) -> tuple[int, int] | None:
    """First pair (by vertex id) that x blocks, or None when x is total
    mutual-visible.  Handy when a failing check needs explaining."""
    fs = _check_vertex_set(g, x)
    return VisibilityOracle.for_graph(g).tmv_violation(_mask(fs))


def is_mv_set(g: Graph, x: AbstractSet[int]) -> bool:
    """True iff every pair inside x is visible past x."""
    fs = _check_vertex_set(g, x)
    return VisibilityOracle.for_graph(g).mv_holds(_mask(fs))


def is_bypass_vertex(g: Graph, u: int) -> bool:
    """True iff u is not the middle vertex of any convex path on 3 vertices.

    A path x-u-y is convex exactly when x and y are non-adjacent and u is
    their only common neighbor: then x and y are at distance two and every
    geodesic between them runs through u.
    """
    _check_vertex(g, u)
    nbrs = sorted(g.neighbors(u))
    for x, y in combinations(nbrs, 2):
        if y in g.neighbors(x):
            continue
        if g.neighbors(x) & g.neighbors(y) == {u}:
            return False
    return True


def bypass_set(g: Graph) -> frozenset[int]:
    """All bypass vertices of g."""
    cached = g._cache.get("bypass")
    if cached is None:
        cached = frozenset(u for u in range(g.order) if is_bypass_vertex(g, u))
        g._cache["bypass"] = cached
    return cached
