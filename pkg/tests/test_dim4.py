"""Five-colored graph machinery: associated pairs, manifold recognition,
Euler identities, crystallization profiles."""

from __future__ import annotations

from itertools import combinations

import pytest

from gemcalc import (
    ColoredGraph,
    GemError,
    HalfInt,
    associated_pairs,
    associated_permutation,
    check_corollary_12rho,
    check_difference_a,
    check_difference_b,
    classify_crystallization,
    crystallization_profile,
    cyclic_permutations,
    dipole,
    enumerate_gems,
    euler_char_via_genus,
    euler_characteristic_complex,
    g_degree_definition,
    g_degree_formula,
    is_closed_3_manifold,
    is_singular_4_manifold,
    regular_genus,
    residue_components,
    residue_count,
    residue_degree_identity,
    subgraph,
    surface_type,
)
from gemcalc.dim4 import NEITHER, SEMI_SIMPLE, WEAK_SEMI_SIMPLE, skip_triples

from conftest import M_A, M_B, M_C, corpus


# --- associated permutations --------------------------------------------------


def test_associated_permutation_example():
    assert associated_permutation((0, 1, 2, 3, 4)) == (0, 2, 4, 1, 3)


def test_association_is_involutive():
    for eps in cyclic_permutations(4):
        assert associated_permutation(associated_permutation(eps)) == eps


def test_association_covers_all_pairs():
    from gemcalc.perms import cycle_pairs

    for eps in cyclic_permutations(4):
        partner = associated_permutation(eps)
        union = sorted(cycle_pairs(eps) + cycle_pairs(partner))
        assert union == sorted(combinations(range(5), 2))


def test_associated_pairs_partition():
    pairs = associated_pairs()
    assert len(pairs) == 6
    seen = [eps for pair in pairs for eps in pair]
    assert sorted(seen) == sorted(cyclic_permutations(4))


def test_associated_permutation_wrong_size():
    with pytest.raises(GemError, match="five colors"):
        associated_permutation((0, 1, 2))


# --- surfaces and manifold recognition ----------------------------------------


def test_surface_type_sphere():
    st = surface_type(dipole(2))
    assert st == (True, 2, HalfInt(0))


def test_surface_type_projective_plane(rp2_gem):
    st = surface_type(rp2_gem)
    assert st.orientable is False
    assert st.euler == 1
    assert st.genus == HalfInt(1)


def test_surface_type_torus_found_by_enumeration():
    hit = None
    for g in enumerate_gems(2, 3, connected_only=True):
        st = surface_type(g)
        if st.orientable and st.euler == 0:
            hit = st
            break
    assert hit is not None
    assert hit.genus == 1


def test_surface_type_errors(g4):
    with pytest.raises(GemError, match="3-colored"):
        surface_type(g4)
    halves = ColoredGraph(d=2, order=4, matchings=(M_A, M_A, M_A))
    with pytest.raises(GemError, match="connected"):
        surface_type(halves)


def test_closed_3_manifold_positive(g4):
    assert is_closed_3_manifold(dipole(3))
    assert is_closed_3_manifold(subgraph(g4, (1, 2, 3, 4), 1))


def test_closed_3_manifold_negative(non_closed_d3):
    # its colors-{0,1,2} residue is a projective plane, not a sphere
    assert not is_closed_3_manifold(non_closed_d3)


def test_singular_4_manifold(dipole4, g4, odd_degree_witness):
    assert is_singular_4_manifold(dipole4)
    assert is_singular_4_manifold(g4)
    assert not is_singular_4_manifold(odd_degree_witness)
    embedded_rp2 = ColoredGraph(d=4, order=4, matchings=(M_A, M_B, M_C, M_A, M_A))
    assert not is_singular_4_manifold(embedded_rp2)


# --- Euler characteristic through genera ---------------------------------------


def test_euler_via_genus_dipole(dipole4):
    for eps, _ in associated_pairs():
        assert euler_char_via_genus(dipole4, eps) == 2


def test_euler_via_genus_g4(g4):
    # (0 + 1) - 2 + 5 - 2
    assert euler_char_via_genus(g4, (0, 1, 2, 3, 4)) == 2
    assert euler_char_via_genus(g4, (0, 1, 2, 3, 4)) == euler_characteristic_complex(g4)


def test_euler_via_genus_pair_independent():
    hits = 0
    for g in corpus(4, 3, 120, seed=89, connected_only=True):
        if not is_singular_4_manifold(g):
            continue
        hits += 1
        chi = euler_characteristic_complex(g)
        assert all(euler_char_via_genus(g, a) == chi for a, _ in associated_pairs())
    assert hits > 0


def test_euler_via_genus_requires_singular(odd_degree_witness):
    with pytest.raises(GemError, match="singular"):
        euler_char_via_genus(odd_degree_witness, (0, 1, 2, 3, 4))


# --- genus difference identities ------------------------------------------------


def test_difference_a_dipole(dipole4):
    assert all(check_difference_a(dipole4, eps) for eps in cyclic_permutations(4))


def test_difference_a_g4(g4):
    # 2(1 - 0) = 8 - 6 on the identity permutation
    assert check_difference_a(g4, (0, 1, 2, 3, 4))
    assert all(check_difference_a(g4, eps) for eps in cyclic_permutations(4))


def test_difference_a_random():
    for g in corpus(4, 4, 60, seed=97, connected_only=True):
        assert all(check_difference_a(g, eps) for eps in cyclic_permutations(4))


def test_difference_b_g4(g4):
    assert all(check_difference_b(g4, eps) for eps in cyclic_permutations(4))
    # the pair/triple relation pins the mixed triple count
    assert 2 * residue_count(g4, (0, 1, 3)) == (
        residue_count(g4, (0, 1))
        + residue_count(g4, (0, 3))
        + residue_count(g4, (1, 3))
        - g4.p
    )
    assert residue_count(g4, (0, 1, 3)) == 1


def test_difference_b_requires_singular(odd_degree_witness):
    with pytest.raises(GemError, match="singular"):
        check_difference_b(odd_degree_witness, (0, 1, 2, 3, 4))


def test_corollary_12rho(dipole4, g4):
    assert check_corollary_12rho(dipole4) == (True, True)
    assert check_corollary_12rho(g4) == (False, False)


def test_corollary_12rho_cooccurs():
    for g in corpus(4, 3, 80, seed=101, connected_only=True):
        left, right = check_corollary_12rho(g)
        assert left == right


# --- crystallization profiles ----------------------------------------------------


def test_profile_dipole(dipole4):
    profile = crystallization_profile(dipole4, 0)
    assert profile.q == 0
    assert profile.p_bar == 1 == dipole4.p
    assert all(v == 1 for v in profile.g_triples.values())
    assert all(v == 0 for v in profile.t_triples.values())


def test_profile_g4(g4):
    profile = crystallization_profile(g4, 0)
    assert profile.euler == 2
    assert profile.g_triples[(0, 1, 2)] == 2
    assert profile.q == 1
    assert profile.p_bar == 1
    assert profile.p_bar + profile.q == g4.p


def test_profile_rank_inconsistency(dipole4):
    with pytest.raises(GemError, match="m=1 inconsistent"):
        crystallization_profile(dipole4, 1)


def test_profile_requires_connected_residues():
    g = ColoredGraph(d=4, order=4, matchings=(M_A, M_A, M_A, M_A, M_B))
    with pytest.raises(GemError, match="disconnected"):
        crystallization_profile(g, 0)


def test_profile_requires_singular(odd_degree_witness):
    with pytest.raises(GemError, match="singular"):
        crystallization_profile(odd_degree_witness, 0)


def test_profile_genus_offsets(g4):
    # each genus equals the base offset plus the skip-triple excess
    profile = crystallization_profile(g4, 0)
    base = 2 * profile.euler + 5 * profile.m - 4
    for eps in cyclic_permutations(4):
        excess = sum(profile.t_triples[t] for t in skip_triples(eps))
        assert regular_genus(g4, eps) == base + excess


def test_classify_dipole(dipole4):
    profile = crystallization_profile(dipole4, 0)
    result = classify_crystallization(profile, dipole4)
    assert result.kind == SEMI_SIMPLE
    assert result.witness == (0, 1, 2, 3, 4)
    assert result.satisfies_12rho


def test_classify_g4(g4):
    profile = crystallization_profile(g4, 0)
    result = classify_crystallization(profile, g4)
    assert result.kind == WEAK_SEMI_SIMPLE
    assert result.witness == (0, 1, 3, 2, 4)  # avoids consecutive 3,4
    assert not result.satisfies_12rho


def test_classify_graph_mismatch(dipole4, g4):
    profile = crystallization_profile(dipole4, 0)
    with pytest.raises(GemError, match="does not belong"):
        classify_crystallization(profile, g4)


def test_classification_kinds_over_enumeration():
    # every accepted profile classifies without invariant violations; the
    # only semi-simple profile at order <= 4 is the dipole (half-order two
    # forces a positive excess, since 3*chi - 5 = 2 has no integer root)
    from itertools import chain

    kinds = set()
    graphs = chain(
        enumerate_gems(4, 1, connected_only=True),
        enumerate_gems(4, 2, connected_only=True),
    )
    for g in graphs:
        hats = all(
            residue_count(g, [x for x in range(5) if x != i]) == 1 for i in range(5)
        )
        if not hats or not is_singular_4_manifold(g):
            continue
        profile = crystallization_profile(g, 0)
        result = classify_crystallization(profile, g)
        kinds.add(result.kind)
        if profile.q <= 2:
            assert result.kind != NEITHER
    assert SEMI_SIMPLE in kinds
    assert WEAK_SEMI_SIMPLE in kinds


# --- residue degree identity -----------------------------------------------------


def test_residue_degree_identity_dipole(dipole4):
    assert residue_degree_identity(dipole4)


def test_residue_degree_identity_g4(g4):
    assert residue_degree_identity(g4)
    totals = []
    for i in range(5):
        rest = [x for x in range(5) if x != i]
        totals.append(
            sum(g_degree_formula(c).twice for c in residue_components(g4, rest))
        )
    # degree 6 = 3*(2 + 4 - 5) + 3, residues contributing (1, 1, 1, 0, 0)
    assert sorted(t // 2 for t in totals) == [0, 0, 1, 1, 1]
    assert g_degree_definition(g4) == 3 * (g4.p + 4 - 5) + HalfInt(sum(totals))


def test_residue_degree_identity_random():
    for g in corpus(4, 4, 60, seed=103, connected_only=True):
        assert residue_degree_identity(g)


def test_dimension_guards(g4, rp2_gem):
    with pytest.raises(GemError, match="5-colored"):
        is_singular_4_manifold(rp2_gem)
    with pytest.raises(GemError, match="4-colored"):
        is_closed_3_manifold(g4)
