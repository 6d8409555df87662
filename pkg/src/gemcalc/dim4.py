"""Five-colored graphs: associated permutations, singular-manifold recognition,
Euler-characteristic identities, and crystallization profiles.

With five colors every cyclic permutation e has an associated partner
e' = (e_0, e_2, e_4, e_1, e_3); the edges of e and e' jointly exhaust the
ten color pairs, the degree equals six times the genus sum of any such
pair, and the six pairs are exactly the classes of the (unique) odd
partition for n = 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping, NamedTuple

from .core import (
    ColoredGraph,
    GemError,
    euler_characteristic_complex,
    is_bipartite,
    is_connected,
    residue_components,
    residue_count,
)
from .embeddings import (
    HalfInt,
    canonical_perm,
    cyclic_permutations,
    g_degree_definition,
    g_degree_formula,
    pair_residue_sum,
    regular_genus,
    regular_genus_min,
)
from .perms import CyclicPerm, cycle_pairs

__all__ = [
    "ClassificationResult",
    "CrystallizationProfile",
    "SurfaceType",
    "associated_pairs",
    "associated_permutation",
    "check_corollary_12rho",
    "check_difference_a",
    "check_difference_b",
    "classify_crystallization",
    "consecutive_triples",
    "crystallization_profile",
    "euler_char_via_genus",
    "is_closed_3_manifold",
    "is_singular_4_manifold",
    "residue_degree_identity",
    "skip_triples",
    "surface_type",
]

SEMI_SIMPLE = "semi_simple"
WEAK_SEMI_SIMPLE = "weak_semi_simple"
NEITHER = "neither"


def _require_d(g: ColoredGraph, d: int) -> None:
    if g.d != d:
        raise GemError(f"operation defined for {d + 1}-colored graphs, got d={g.d}")


def associated_permutation(eps: CyclicPerm) -> CyclicPerm:
    """The partner (e_0, e_2, e_4, e_1, e_3), in canonical form.

    Association is an involution up to canonical form, and the edges of a
    permutation together with the edges of its partner cover every
    unordered pair of the five colors exactly once.
    """
    if len(eps) != 5:
        raise GemError(f"associated permutations need five colors, got {len(eps)}")
    e = canonical_perm(eps)
    return canonical_perm((e[0], e[2], e[4], e[1], e[3]))


@lru_cache(maxsize=1)
def associated_pairs() -> tuple[tuple[CyclicPerm, CyclicPerm], ...]:
    """The six unordered pairs {e, e'} among the twelve canonical permutations."""
    out = []
    for eps in cyclic_permutations(4):
        partner = associated_permutation(eps)
        if eps < partner:
            out.append((eps, partner))
    return tuple(out)


def consecutive_triples(eps: CyclicPerm) -> list[tuple[int, int, int]]:
    """Sorted triples (e_i, e_{i+1}, e_{i+2}) for i over the cyclic index set."""
    return [
        tuple(sorted((eps[i], eps[(i + 1) % 5], eps[(i + 2) % 5])))
        for i in range(5)
    ]


def skip_triples(eps: CyclicPerm) -> list[tuple[int, int, int]]:
    """Sorted triples (e_i, e_{i+2}, e_{i+4}); together with the consecutive
    triples these exhaust all ten color triples."""
    return [
        tuple(sorted((eps[i], eps[(i + 2) % 5], eps[(i + 4) % 5])))
        for i in range(5)
    ]


class SurfaceType(NamedTuple):
    orientable: bool
    euler: int
    genus: HalfInt  # orientable genus, or half the non-orientable genus


def surface_type(g: ColoredGraph) -> SurfaceType:
    """Orientability, Euler characteristic, and genus of a 3-colored graph's surface."""
    _require_d(g, 2)
    if not is_connected(g):
        raise GemError("surface type requires a connected graph")
    chi = pair_residue_sum(g) - g.p
    return SurfaceType(is_bipartite(g), chi, HalfInt(2 - chi))


@lru_cache(maxsize=4096)
def is_closed_3_manifold(g: ColoredGraph) -> bool:
    """True iff every 3-colored residue component of the 4-colored graph is a sphere."""
    _require_d(g, 3)
    for c in g.colors:
        rest = [x for x in g.colors if x != c]
        for comp in residue_components(g, rest):
            if surface_type(comp).euler != 2:
                return False
    return True


@lru_cache(maxsize=4096)
def is_singular_4_manifold(g: ColoredGraph) -> bool:
    """True iff every 4-colored residue component represents a closed 3-manifold."""
    _require_d(g, 4)
    if not is_connected(g):
        raise GemError("singular-manifold recognition requires a connected graph")
    for c in g.colors:
        rest = [x for x in g.colors if x != c]
        for comp in residue_components(g, rest):
            if not is_closed_3_manifold(comp):
                return False
    return True


def _hat_residue_sum(g: ColoredGraph) -> int:
    return sum(
        residue_count(g, [x for x in g.colors if x != i]) for i in g.colors
    )


def euler_char_via_genus(g: ColoredGraph, eps: CyclicPerm) -> int:
    """Euler characteristic of the represented singular 4-manifold from one
    associated pair: (rho_e + rho_e') - p + sum g_hat - 2.

    Must equal the simplicial Euler characteristic and not depend on eps.
    """
    _require_d(g, 4)
    if not is_singular_4_manifold(g):
        raise GemError("Euler characteristic via genera requires a singular-manifold graph")
    pair_sum = regular_genus(g, eps) + regular_genus(g, associated_permutation(eps))
    value = pair_sum + _hat_residue_sum(g) - g.p - 2
    if not value.is_integer:
        raise GemError("internal invariant violation: non-integral Euler characteristic")
    return value.to_int()


def check_difference_a(g: ColoredGraph, eps: CyclicPerm) -> bool:
    """Exact identity 2(rho_e' - rho_e) = sum g_{e_j e_{j+1}} - sum g_{e_j e_{j+2}}.

    Holds for every 5-colored graph; a False return signals an
    implementation bug, not a property of the input.
    """
    _require_d(g, 4)
    diff = regular_genus(g, associated_permutation(eps)) - regular_genus(g, eps)
    adjacent = sum(residue_count(g, pair) for pair in cycle_pairs(eps, 1))
    skip = sum(residue_count(g, pair) for pair in cycle_pairs(eps, 2))
    return 2 * diff == adjacent - skip


def check_difference_b(g: ColoredGraph, eps: CyclicPerm) -> bool:
    """Triple-residue form of the genus difference, on singular-manifold graphs.

    Computes rho_e' - rho_e against the difference of actual triple-residue
    sums, and separately cross-checks the relation
    2 g_{rst} = g_{rs} + g_{rt} + g_{st} - p on all ten triples.
    """
    _require_d(g, 4)
    if not is_singular_4_manifold(g):
        raise GemError("triple-residue difference requires a singular-manifold graph")
    diff = regular_genus(g, associated_permutation(eps)) - regular_genus(g, eps)
    consec = sum(residue_count(g, t) for t in consecutive_triples(eps))
    skip = sum(residue_count(g, t) for t in skip_triples(eps))
    if diff != consec - skip:
        return False
    for r, s, t in combinations(g.colors, 3):
        lhs = 2 * residue_count(g, (r, s, t))
        rhs = (
            residue_count(g, (r, s))
            + residue_count(g, (r, t))
            + residue_count(g, (s, t))
            - g.p
        )
        if lhs != rhs:
            return False
    return True


def check_corollary_12rho(g: ColoredGraph) -> tuple[bool, bool]:
    """Evaluate both sides of the minimal-degree criterion independently.

    Left: the degree equals twelve times the regular genus.  Right: the
    adjacent-pair and skip-pair residue sums agree for every permutation.
    The two must co-occur.
    """
    _require_d(g, 4)
    rho_min, _ = regular_genus_min(g)
    left = g_degree_definition(g) == 12 * rho_min
    right = True
    for eps in cyclic_permutations(4):
        adjacent = sum(residue_count(g, pair) for pair in cycle_pairs(eps, 1))
        skip = sum(residue_count(g, pair) for pair in cycle_pairs(eps, 2))
        if adjacent != skip:
            right = False
            break
    return left, right


@dataclass(frozen=True)
class CrystallizationProfile:
    """Ledger (m, g_{jkl}, t_{jkl}, q, p_bar) of a crystallization of a closed
    4-manifold with first-homotopy rank m; p = p_bar + q must hold."""

    m: int
    euler: int
    half_order: int
    g_triples: Mapping[tuple[int, int, int], int]
    t_triples: Mapping[tuple[int, int, int], int]
    q: int
    p_bar: int


def crystallization_profile(g: ColoredGraph, m: int) -> CrystallizationProfile:
    """Build and validate the triple-residue ledger for a crystallization.

    The caller asserts that the graph is a crystallization of a closed
    4-manifold whose fundamental group has rank m; that assertion is
    validated only through the decidable consequences: connected 4-colored
    residues, the singular-manifold residue test, t_{jkl} >= 0, and the
    half-order identity p = 3*chi + 5(2m-1) + q.
    """
    _require_d(g, 4)
    if m < 0:
        raise GemError(f"rank metadata must be non-negative, got {m}")
    for i in g.colors:
        if residue_count(g, [x for x in g.colors if x != i]) != 1:
            raise GemError(f"residue missing color {i} is disconnected: not a crystallization")
    if not is_singular_4_manifold(g):
        raise GemError("graph fails the singular-manifold residue test")
    chi = euler_characteristic_complex(g)
    g_triples = {
        t: residue_count(g, t) for t in combinations(range(5), 3)
    }
    t_triples = {t: v - 1 - m for t, v in g_triples.items()}
    for t, v in t_triples.items():
        if v < 0:
            raise GemError(
                f"rank metadata m={m} inconsistent: triple residue {t} has count "
                f"{g_triples[t]} < 1+m"
            )
    q = sum(t_triples.values())
    p_bar = 3 * chi + 5 * (2 * m - 1)
    if g.p != p_bar + q:
        raise GemError(
            f"half-order identity failed: p={g.p} but 3*chi+5*(2m-1)+q = {p_bar + q}; "
            "the closed-manifold/rank metadata is inconsistent with the graph"
        )
    return CrystallizationProfile(
        m=m,
        euler=chi,
        half_order=g.p,
        g_triples=g_triples,
        t_triples=t_triples,
        q=q,
        p_bar=p_bar,
    )


@dataclass(frozen=True)
class ClassificationResult:
    kind: str  # semi_simple | weak_semi_simple | neither
    witness: CyclicPerm | None
    satisfies_12rho: bool


def classify_crystallization(
    profile: CrystallizationProfile, g: ColoredGraph
) -> ClassificationResult:
    """Classify a profiled crystallization by its vanishing triple excesses.

    Semi-simple means every t_{jkl} is zero (q = 0); weak semi-simple means
    some permutation has all five consecutive-triple excesses zero, and the
    witness is the first such permutation.  Three equivalent statements are
    co-evaluated and must agree: the existence of a permutation whose
    associated-partner genus exceeds its own by exactly q, the witness
    existence, and the regular genus hitting 2*chi + 5m - 4.  Their
    disagreement, and a profile with q <= 2 but no witness, are reported as
    invariant violations rather than reconciled.
    """
    if g.p != profile.half_order:
        raise GemError("profile does not belong to this graph")
    t = profile.t_triples
    witness = None
    for eps in cyclic_permutations(4):
        if all(t[tri] == 0 for tri in consecutive_triples(eps)):
            witness = eps
            break
    stmt_witness = witness is not None
    stmt_gap = False
    for eps in cyclic_permutations(4):
        diff = regular_genus(g, associated_permutation(eps)) - regular_genus(g, eps)
        if diff == profile.q:
            stmt_gap = True
            break
    rho_min, _ = regular_genus_min(g)
    stmt_genus = rho_min == 2 * profile.euler + 5 * profile.m - 4
    if not (stmt_gap == stmt_witness == stmt_genus):
        raise GemError(
            "internal invariant violation: classification statements disagree "
            f"(gap={stmt_gap}, witness={stmt_witness}, genus={stmt_genus})"
        )
    left, right = check_corollary_12rho(g)
    if left != right:
        raise GemError(
            "internal invariant violation: minimal-degree criterion sides disagree"
        )
    if profile.q == 0:
        kind = SEMI_SIMPLE
    elif stmt_witness:
        kind = WEAK_SEMI_SIMPLE
    else:
        kind = NEITHER
    if profile.q <= 2 and kind == NEITHER:
        raise GemError(
            "internal invariant violation: q <= 2 must force a consecutive-triple witness"
        )
    if (profile.q == 0) != (stmt_witness and left):
        raise GemError(
            "internal invariant violation: vanishing excess must coincide with "
            "witness existence plus the minimal-degree property"
        )
    return ClassificationResult(kind=kind, witness=witness, satisfies_12rho=left)


def residue_degree_identity(g: ColoredGraph) -> bool:
    """Degree of the graph against the degrees of its 4-colored residues.

    Checks omega = 3*(p + 4 - sum g_hat) + sum of the component degrees of
    the five residues (components computed at d = 3 by the closed formula),
    and that the component-degree total is a multiple of three.
    """
    _require_d(g, 4)
    if not is_connected(g):
        raise GemError("the residue-degree identity requires a connected graph")
    component_total = HalfInt(0)
    for i in g.colors:
        rest = [x for x in g.colors if x != i]
        for comp in residue_components(g, rest):
            component_total = component_total + g_degree_formula(comp)
    lhs = g_degree_definition(g)
    rhs = 3 * (g.p + 4 - _hat_residue_sum(g)) + component_total
    if lhs != rhs:
        return False
    return component_total.is_integer and component_total.to_int() % 3 == 0
