"""Blow-ups of base cycles and base matchings, with level-difference arithmetic.

Giving weight w to a graph replaces each base vertex x by the w vertices
(x, 0)..(x, w-1) and each base edge {x, y} by the complete bipartite join
between the copies.  Two derived notions drive all constructions here:

* the difference of a weighted-cycle edge, taken along the cycle
  orientation: the edge from (position p, level i) to (position p+1,
  level j) has difference (j - i) mod w.  Difference classes partition
  the blow-up's edges into w sets of m*w each.

* the aligned subgraph J: the difference-0 edges.  Constructions on
  blow-ups deliberately avoid J; the leftover aligned edges are handled
  by the filling stage together with the in-group complete graphs.

Formulas are written against cycle POSITIONS 0..m-1 and mapped through the
stored base ordering, so they apply to any base cycle, not just
(0, 1, ..., m-1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Edge, Vertex
from .seeds import Matching, _pair


@dataclass(frozen=True)
class WeightedCycle:
    """A base m-cycle blown up by the given weight."""

    base: tuple[int, ...]
    weight: int

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        if len(self.base) < 3:
            raise ValueError(f"cycle needs >= 3 base points, got {len(self.base)}")
        if len(set(self.base)) != len(self.base):
            raise ValueError("cycle base points must be distinct")
        if self.weight < 2:
            raise ValueError(f"weight must be >= 2, got {self.weight}")

    @property
    def m(self) -> int:
        return len(self.base)

    def vertices(self) -> list[Vertex]:
        return [Vertex(x, i) for x in self.base for i in range(self.weight)]


@dataclass(frozen=True)
class WeightedOneFactor:
    """A base perfect matching blown up by the given weight.

    Pairs are stored canonically (smaller point first); difference
    arithmetic orients each pair from its smaller to its larger point.
    """

    base_matching: Matching
    weight: int

    def __post_init__(self):
        pairs = tuple(sorted(_pair(a, b) for a, b in self.base_matching))
        points = [p for pair in pairs for p in pair]
        if len(set(points)) != len(points):
            raise ValueError("base matching pairs are not disjoint")
        if not pairs:
            raise ValueError("base matching is empty")
        if self.weight < 2:
            raise ValueError(f"weight must be >= 2, got {self.weight}")
        object.__setattr__(self, "base_matching", pairs)

    def vertices(self) -> list[Vertex]:
        points = sorted(p for pair in self.base_matching for p in pair)
        return [Vertex(x, i) for x in points for i in range(self.weight)]


def cycle_edge(c: WeightedCycle, p: int, i: int, d: int) -> Edge:
    """The edge from (position p, level i) with difference d, canonicalized."""
    if not 0 <= p < c.m:
        raise ValueError(f"position {p} out of range 0..{c.m - 1}")
    if not 0 <= i < c.weight:
        raise ValueError(f"level {i} out of range 0..{c.weight - 1}")
    if not 0 <= d < c.weight:
        raise ValueError(f"difference {d} out of range 0..{c.weight - 1}")
    return Edge(
        Vertex(c.base[p], i),
        Vertex(c.base[(p + 1) % c.m], (i + d) % c.weight),
    )


def cycle_edges(c: WeightedCycle) -> set[Edge]:
    """All m*w^2 edges of the blown-up cycle."""
    return {
        cycle_edge(c, p, i, d)
        for p in range(c.m)
        for i in range(c.weight)
        for d in range(c.weight)
    }


def difference_edges(c: WeightedCycle, d: int) -> set[Edge]:
    """All m*w edges with the given difference."""
    return {cycle_edge(c, p, i, d) for p in range(c.m) for i in range(c.weight)}


def edge_difference(c: WeightedCycle, e: Edge) -> int:
    """Difference of a weighted-cycle edge, oriented along increasing position."""
    pos = {x: p for p, x in enumerate(c.base)}
    (a, i), (b, j) = (e.u.base, e.u.level), (e.v.base, e.v.level)
    if a not in pos or b not in pos:
        raise ValueError(f"{e} is not an edge of this cycle")
    if c.base[(pos[a] + 1) % c.m] == b:
        return (j - i) % c.weight
    if c.base[(pos[b] + 1) % c.m] == a:
        return (i - j) % c.weight
    raise ValueError(f"{e} is not an edge of this cycle")


def one_factor_edges(w: WeightedOneFactor) -> set[Edge]:
    """All (m/2)*w^2 edges of the blown-up matching."""
    return {
        Edge(Vertex(x, i), Vertex(y, j))
        for x, y in w.base_matching
        for i in range(w.weight)
        for j in range(w.weight)
    }


def j_edges(structure: WeightedCycle | WeightedOneFactor) -> set[Edge]:
    """The aligned (difference-0) edges of a blow-up."""
    if isinstance(structure, WeightedCycle):
        return difference_edges(structure, 0)
    return {
        Edge(Vertex(x, i), Vertex(y, i))
        for x, y in structure.base_matching
        for i in range(structure.weight)
    }


def nonaligned_edges(structure: WeightedCycle | WeightedOneFactor) -> set[Edge]:
    """Blow-up edges minus the aligned subgraph: the host every blown-up
    decomposition in this package lives on."""
    if isinstance(structure, WeightedCycle):
        return cycle_edges(structure) - j_edges(structure)
    return one_factor_edges(structure) - j_edges(structure)
