"""Uniformly resolvable decompositions of K_v into perfect matchings and
odd n-star factors: admissibility, explicit constructions for v = m(n+1),
an independent verifier, and an exhaustive small-case search oracle."""

from .admissibility import (
    ADMISSIBLE_UNRESOLVED,
    CONSTRUCTIVE,
    INADMISSIBLE,
    AdmissiblePair,
    CoverageVerdict,
    admissible_pairs,
    check_pair,
    constructive_pairs,
)
from .assembler import BuildRequest, PairNotConstructive, construct, construct_pair
from .aurd import AurdOutput, matching_aurd, star_aurd, weighted_one_factor_aurd
from .blowup import (
    WeightedCycle,
    WeightedOneFactor,
    cycle_edge,
    cycle_edges,
    difference_edges,
    edge_difference,
    j_edges,
    nonaligned_edges,
)
from .filling import FillOutput, fill_even, fill_odd
from .model import (
    ONE_FACTOR,
    STAR_FACTOR,
    ConstructionError,
    Decomposition,
    Edge,
    FactorClass,
    K2Block,
    Params,
    StarBlock,
    VerificationReport,
    Vertex,
    all_vertices,
    block_vertices,
    edges_of_block,
    vertex_from_flat,
)
from .search import (
    BUDGET_EXCEEDED,
    FOUND,
    NOT_FOUND_EXHAUSTED,
    SearchOutcome,
    exhaustive_urd,
)
from .seeds import (
    HamDecomposition,
    OneFactorization,
    hamiltonian_decomposition,
    one_factorization,
    one_factorization_containing,
)
from .verifier import verify, verify_aurd

__version__ = "0.1.0"
