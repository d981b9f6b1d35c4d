"""Classical seed structures on small complete graphs.

Two deterministic schemes, both built around a fixed hub vertex:

* Hamiltonian decomposition of K_m.  For odd m = 2t+1 the non-hub vertices
  are Z_{2t}; the zig-zag path k, k+1, k-1, k+2, k-2, ..., k+t closed
  through the hub gives one Hamiltonian cycle, and the rotations
  k = 0..t-1 partition E(K_m).  For even m = 2t the non-hub vertices are
  Z_{2t-1}; the zig-zag k, k+1, k-1, ..., k+(t-1), k-(t-1) closed through
  the hub gives a Hamiltonian cycle for k = 0..t-2, and the edges those
  t-1 cycles miss form the perfect matching {hub, t-1} together with the
  pairs symmetric about t-1.

* Round-robin one-factorization of K_k (k even): vertex 0 is fixed and
  1..k-1 rotate, giving the k-1 factors F_j = {0, 1+j} plus the pairs
  symmetric about 1+j.

Everything returned is in canonical form: pairs sorted, factors sorted.
"""

from __future__ import annotations

from dataclasses import dataclass

Pair = tuple[int, int]
Matching = tuple[Pair, ...]


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def _canon_matching(pairs) -> Matching:
    return tuple(sorted(_pair(a, b) for a, b in pairs))


@dataclass(frozen=True)
class HamDecomposition:
    """Edge partition of K_m into Hamiltonian cycles (plus a perfect
    matching when m is even)."""

    m: int
    cycles: tuple[tuple[int, ...], ...]
    leftover_matching: Matching | None


@dataclass(frozen=True)
class OneFactorization:
    """Edge partition of K_k into k-1 perfect matchings."""

    k: int
    factors: tuple[Matching, ...]


def hamiltonian_decomposition(m: int) -> HamDecomposition:
    """Decompose K_m into (m-1)/2 Hamiltonian cycles (m odd), or into
    (m-2)/2 Hamiltonian cycles plus a perfect matching (m even)."""
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    hub = m - 1
    if m % 2 == 1:
        t = (m - 1) // 2
        top = m - 1  # modulus of the rotating part
        cycles = []
        for k in range(t):
            seq = [k % top]
            for i in range(1, t):
                seq.append((k + i) % top)
                seq.append((k - i) % top)
            seq.append((k + t) % top)
            cycles.append((hub, *seq))
        return HamDecomposition(m, tuple(cycles), None)

    t = m // 2
    top = m - 1
    cycles = []
    for k in range(t - 1):
        seq = [k % top]
        for i in range(1, t):
            seq.append((k + i) % top)
            seq.append((k - i) % top)
        cycles.append((hub, *seq))
    center = t - 1
    matching = [(hub, center)]
    for j in range(1, t):
        matching.append(_pair((center - j) % top, (center + j) % top))
    return HamDecomposition(m, tuple(cycles), _canon_matching(matching))


def one_factorization(k: int) -> OneFactorization:
    """Round-robin one-factorization of K_k for even k >= 2."""
    if k < 2 or k % 2 == 1:
        raise ValueError(f"need even k >= 2, got {k}")
    if k == 2:
        return OneFactorization(2, (((0, 1),),))
    top = k - 1
    factors = []
    for j in range(k - 1):
        pairs = [(0, 1 + j)]
        for i in range(1, k // 2):
            pairs.append(_pair(1 + (j - i) % top, 1 + (j + i) % top))
        factors.append(_canon_matching(pairs))
    return OneFactorization(k, tuple(factors))


def _check_matching(prescribed) -> tuple[Matching, int]:
    pairs = _canon_matching(prescribed)
    points = [p for pair in pairs for p in pair]
    k = 2 * len(pairs)
    if len(set(points)) != len(points):
        raise ValueError("prescribed pairs are not disjoint")
    if sorted(points) != list(range(k)):
        raise ValueError(f"prescribed matching must cover the points 0..{k - 1}")
    for a, b in pairs:
        if a == b:
            raise ValueError(f"loop pair ({a},{b})")
    return pairs, k


def one_factorization_containing(prescribed) -> OneFactorization:
    """One-factorization of K_k whose first factor is the given perfect
    matching on points 0..k-1.

    Built by relabeling: any perfect matching maps onto any other under a
    point bijection, so we send the round-robin factorization's first
    factor onto the prescribed one and relabel every factor.
    """
    pairs, k = _check_matching(prescribed)
    base = one_factorization(k)
    relabel = {}
    for (a, b), (c, d) in zip(base.factors[0], pairs):
        relabel[a] = c
        relabel[b] = d
    factors = tuple(
        _canon_matching((relabel[a], relabel[b]) for a, b in factor)
        for factor in base.factors
    )
    return OneFactorization(k, factors)
