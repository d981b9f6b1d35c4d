"""Exhaustive backtracking search for desk-scale decompositions.

An independent existence oracle: given (v, n, r, s), build the classes
depth-first, always extending the current class at its lexicographically
least uncovered vertex.  Edge availability is tracked as per-vertex
bitmasks.  The first class is fixed to a canonical form (a canonical
perfect matching when r > 0, else a canonical star factor), which is
sound symmetry reduction: any solution can be relabeled to start with it.
No deeper isomorph rejection is attempted, so NOT_FOUND_EXHAUSTED is a
genuine nonexistence certificate for the instance.

Class scheduling: after the canonical first class, all star classes are
built before the remaining one-factor classes.  Star classes carry the
binding constraints (center quotas, leaf arity); one-factor classes are
the flexible filler, and building them first was measured to defer every
conflict into an enormous star subtree (tens of millions of nodes for
v=12) while stars-early resolves the same instances in hundreds.  The
witness is reported with its one-factor classes first regardless.

Two sound prunes keep exhaustion honest and fast; neither can discard a
solution:

* in any solution every vertex is a star center in exactly s/(n+1) of
  the star classes (its degree across the star classes is v-1-r =
  n*x + (s-x), which forces x = s/(n+1) per vertex).  Center quotas are
  tracked, and branches where a vertex overshoots its quota or can no
  longer meet it are cut.

* within a class, every uncovered vertex must still be joinable to some
  other uncovered vertex; a vertex isolated inside the remaining
  uncovered set kills the branch immediately.

Pairs failing the arithmetic necessary conditions are rejected without
search.  The vertex model addresses K_v as an m x (n+1) grid, so v must
be a multiple of n+1; other orders (pure one-factorization instances) are
outside this module's scope and raise ValueError.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from . import admissibility
from .model import (
    ONE_FACTOR,
    STAR_FACTOR,
    Decomposition,
    Edge,
    FactorClass,
    K2Block,
    Params,
    StarBlock,
    vertex_from_flat,
)
from .verifier import verify

FOUND = "FOUND"
NOT_FOUND_EXHAUSTED = "NOT_FOUND_EXHAUSTED"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search run.

    complete is True when the run was not cut short by a budget: either a
    witness was found or the symmetry-reduced tree was fully exhausted.
    """

    status: str
    witness: Decomposition | None
    nodes_explored: int
    elapsed: float
    complete: bool
    reason: str | None = None


class _BudgetExceeded(Exception):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def exhaustive_urd(
    v: int,
    n: int,
    r: int,
    s: int,
    max_nodes: int | None = None,
    timeout: float | None = None,
) -> SearchOutcome:
    """Search K_v exhaustively for r one-factors plus s star-factor classes."""
    start = time.perf_counter()
    reason = admissibility.inadmissibility_reason(v, n, r, s)
    if reason is not None:
        return SearchOutcome(
            NOT_FOUND_EXHAUSTED,
            None,
            0,
            time.perf_counter() - start,
            complete=True,
            reason=f"necessary conditions fail: {reason}",
        )
    if v % (n + 1) != 0:
        raise ValueError(
            f"v={v} is not a multiple of n+1={n + 1}: no grid vertex model"
        )
    params = Params.for_order(v, n)

    full = (1 << v) - 1
    adj = [full ^ (1 << u) for u in range(v)]
    if r > 0:
        kinds = [ONE_FACTOR] + [STAR_FACTOR] * s + [ONE_FACTOR] * (r - 1)
    else:
        kinds = [STAR_FACTOR] * s
    # stars_left[ci] = star classes at index >= ci (current one included)
    stars_left = [0] * (len(kinds) + 1)
    for ci in range(len(kinds) - 1, -1, -1):
        stars_left[ci] = stars_left[ci + 1] + (kinds[ci] == STAR_FACTOR)
    placed: list[list[tuple]] = [[] for _ in kinds]
    quota = s // (n + 1)  # forced per-vertex center count
    centers_used = [0] * v
    nodes = 0
    deadline = start + timeout if timeout is not None else None

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise _BudgetExceeded
        if deadline is not None and nodes % 256 == 0:
            if time.perf_counter() > deadline:
                raise _BudgetExceeded

    def take_edge(a: int, b: int) -> None:
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)

    def give_edge(a: int, b: int) -> None:
        adj[a] |= 1 << b
        adj[b] |= 1 << a

    def place_star(ci: int, covered: int, center: int, leaves: tuple[int, ...]) -> bool:
        mask = 1 << center
        for leaf in leaves:
            take_edge(center, leaf)
            mask |= 1 << leaf
        centers_used[center] += 1
        placed[ci].append(("star", center, leaves))
        if extend(ci, covered | mask):
            return True
        placed[ci].pop()
        centers_used[center] -= 1
        for leaf in leaves:
            give_edge(center, leaf)
        return False

    def extend(ci: int, covered: int) -> bool:
        if covered == full:
            if ci + 1 == len(kinds):
                return True
            return extend(ci + 1, 0)
        low = (~covered & full) & -(~covered & full)
        u = low.bit_length() - 1
        tick()
        avail = adj[u] & ~covered
        if kinds[ci] == ONE_FACTOR:
            for w in _bits(avail):
                take_edge(u, w)
                placed[ci].append(("k2", u, w))
                if extend(ci, covered | low | (1 << w)):
                    return True
                placed[ci].pop()
                give_edge(u, w)
            return False

        # Star class.  left = star classes still open, current included.
        left = stars_left[ci]
        uncovered = ~covered & full
        must = 0
        leaf_ok = 0
        scan = uncovered
        while scan:
            bit = scan & -scan
            scan ^= bit
            w = bit.bit_length() - 1
            need = quota - centers_used[w]
            if need > left:
                return False
            if need == left:
                must |= bit
            else:
                leaf_ok |= bit
            if adj[w] & uncovered == 0:
                return False
        if must.bit_count() > uncovered.bit_count() // (n + 1):
            return False

        # u joins a star either as its center or as a leaf of a later center;
        # every other member of that star is > u, so each star is tried once.
        if centers_used[u] < quota:
            for leaves in combinations(_bits(avail & leaf_ok), n):
                if place_star(ci, covered, u, leaves):
                    return True
        if leaf_ok & low:
            for center in _bits(avail):
                if centers_used[center] >= quota:
                    continue
                rest = adj[center] & ~covered & ~low & leaf_ok & ~(1 << center)
                for others in combinations(_bits(rest), n - 1):
                    if place_star(ci, covered, center, (u, *others)):
                        return True
        return False

    if kinds[0] == ONE_FACTOR:
        first: list[tuple] = [("k2", u, u + 1) for u in range(0, v, 2)]
        for _, a, b in first:
            take_edge(a, b)
    else:
        first = [
            ("star", c, tuple(range(c + 1, c + n + 1))) for c in range(0, v, n + 1)
        ]
        for _, center, leaves in first:
            centers_used[center] += 1
            for leaf in leaves:
                take_edge(center, leaf)
    placed[0] = first

    complete = True
    try:
        ok = len(kinds) == 1 or extend(1, 0)
    except _BudgetExceeded:
        ok = False
        complete = False
    elapsed = time.perf_counter() - start

    if not ok:
        if complete:
            return SearchOutcome(
                NOT_FOUND_EXHAUSTED,
                None,
                nodes,
                elapsed,
                complete=True,
                reason="symmetry-reduced search tree exhausted",
            )
        return SearchOutcome(BUDGET_EXCEEDED, None, nodes, elapsed, complete=False)

    weight = n + 1
    one_classes = []
    star_classes = []
    for kind, blocks in zip(kinds, placed):
        if kind == ONE_FACTOR:
            k2s = [
                K2Block(Edge(vertex_from_flat(a, weight), vertex_from_flat(b, weight)))
                for _, a, b in blocks
            ]
            one_classes.append(FactorClass(ONE_FACTOR, tuple(sorted(k2s))))
        else:
            stars = [
                StarBlock(
                    vertex_from_flat(center, weight),
                    tuple(vertex_from_flat(leaf, weight) for leaf in leaves),
                )
                for _, center, leaves in blocks
            ]
            star_classes.append(FactorClass(STAR_FACTOR, tuple(sorted(stars))))
    witness = Decomposition.from_classes(params, one_classes + star_classes)
    report = verify(witness)
    if not report.passed:
        raise AssertionError(f"search produced an invalid witness: {report.violations}")
    return SearchOutcome(FOUND, witness, nodes, elapsed, complete=True)
