"""gemcalc: invariants of edge-colored graphs encoding PL pseudomanifolds.

The package computes residues, regular genera, the Gurau degree and its
reduced form, Hamiltonian cycle decompositions of complete graphs, and the
five-color crystallization machinery, and ships an enumeration harness that
checks the divisibility and Euler-characteristic identities over exhaustive
and seeded random corpora.
"""

from .core import (
    ColoredGraph,
    GemError,
    ResidueTable,
    euler_characteristic_complex,
    is_bipartite,
    is_connected,
    parse_gem,
    residue_components,
    residue_count,
    residue_table,
    serialize_gem,
    simplex_counts,
    subgraph,
)
from .cycle_decomp import (
    DecompositionClass,
    HamCycle,
    PermPartition,
    class_of,
    cycle_edges,
    hamiltonian_cycles,
    partition_even,
    partition_odd,
    validate_class,
    validate_partition,
    walecki_decomposition,
)
from .dim4 import (
    ClassificationResult,
    CrystallizationProfile,
    SurfaceType,
    associated_pairs,
    associated_permutation,
    check_corollary_12rho,
    check_difference_a,
    check_difference_b,
    classify_crystallization,
    crystallization_profile,
    euler_char_via_genus,
    is_closed_3_manifold,
    is_singular_4_manifold,
    residue_degree_identity,
    surface_type,
)
from .embeddings import (
    CyclicPerm,
    HalfInt,
    canonical_perm,
    class_genus_sum,
    cyclic_permutations,
    g_degree_definition,
    g_degree_formula,
    pair_residue_sum,
    reduced_g_degree,
    regular_genus,
    regular_genus_min,
)
from .generator import (
    GenSpec,
    SplitMix64,
    dipole,
    enumerate_gems,
    random_gem,
    search_odd_reduced,
    search_rp2,
)

__version__ = "0.1.0"
