import random

import pytest
from hypothesis import given, settings, strategies as st

from autsign import (
    chain_determinant_check,
    combinatorial_sign,
    component_permutation_sign,
    compose,
    enumerate_automorphisms,
    fundamental_cycles,
    has_odd_automorphism,
    homological_sign,
    homological_sign_extended,
    parse_graph,
    random_orientation,
    reference_orientation,
    spanning_forest,
    verify_graph,
)
from conftest import GOLDEN_TEXTS, multigraphs

# sign of every automorphism, in enumeration order, derived independently by
# brute force over all half-edge permutations plus the chain determinants
EXPECTED_SIGNS = {
    "loop": (1, -1),
    "single_edge": (1, 1),
    "double_edge": (1, 1, -1, -1),
    "triangle": (1, 1, 1, 1, 1, 1),
    "path3": (1, -1),
    "path4": (1, -1),
    "loop_plus_edge": (1, -1),
    "two_edges_disjoint": (1, 1, 1, 1, 1, 1, 1, 1),
}


def setup_graph(name):
    g = parse_graph(GOLDEN_TEXTS[name])
    o = reference_orientation(g)
    basis = fundamental_cycles(g, o, spanning_forest(g))
    return g, o, basis


@pytest.mark.parametrize("name, expected", sorted(EXPECTED_SIGNS.items()))
def test_combinatorial_sign_goldens(name, expected):
    g, o, _ = setup_graph(name)
    got = tuple(combinatorial_sign(g, o, a) for a in enumerate_automorphisms(g))
    assert got == expected


@pytest.mark.parametrize("name, expected", sorted(EXPECTED_SIGNS.items()))
def test_homological_sign_goldens(name, expected):
    g, o, basis = setup_graph(name)
    got = tuple(
        homological_sign_extended(g, o, basis, a) for a in enumerate_automorphisms(g)
    )
    assert got == expected


def test_homological_sign_rejects_disconnected():
    g, o, basis = setup_graph("two_edges_disjoint")
    with pytest.raises(ValueError, match="homological_sign_extended"):
        homological_sign(g, o, basis, enumerate_automorphisms(g)[0])


def test_extended_equals_plain_on_connected():
    for name in ("loop", "triangle", "double_edge", "path4"):
        g, o, basis = setup_graph(name)
        for a in enumerate_automorphisms(g):
            assert homological_sign(g, o, basis, a) == homological_sign_extended(
                g, o, basis, a
            )


def test_component_swap_bookkeeping():
    # swapping two disjoint edges: odd edge permutation, trivial cycle space,
    # odd component permutation; everything cancels to +1 on both routes
    g, o, basis = setup_graph("two_edges_disjoint")
    swap = next(
        a for a in enumerate_automorphisms(g) if a.vertex_perm == (2, 3, 0, 1)
    )
    assert component_permutation_sign(g, swap) == -1
    assert homological_sign_extended(g, o, basis, swap) == 1
    assert combinatorial_sign(g, o, swap) == 1
    factors = chain_determinant_check(g, o, basis, swap)
    assert factors.component_sign == -1
    assert factors.consistent


def test_chain_determinant_factors_loop_reversal():
    g, o, basis = setup_graph("loop")
    reversal = enumerate_automorphisms(g)[1]
    factors = chain_determinant_check(g, o, basis, reversal)
    assert (
        factors.edge_space_det,
        factors.vertex_space_det,
        factors.cycle_space_det,
        factors.component_sign,
    ) == (-1, 1, -1, 1)
    assert factors.consistent


def test_chain_determinant_factors_triangle_reflection():
    g, o, basis = setup_graph("triangle")
    reflection = enumerate_automorphisms(g)[1]
    assert reflection.vertex_perm == (0, 2, 1)
    factors = chain_determinant_check(g, o, basis, reflection)
    assert (
        factors.edge_space_det,
        factors.vertex_space_det,
        factors.cycle_space_det,
    ) == (1, -1, -1)
    assert factors.consistent


def test_chain_determinant_identity_factors(golden):
    for g in golden.values():
        o = reference_orientation(g)
        basis = fundamental_cycles(g, o, spanning_forest(g))
        factors = chain_determinant_check(
            g, o, basis, enumerate_automorphisms(g)[0]
        )
        assert factors == type(factors)(1, 1, 1, 1)


@given(multigraphs(max_vertices=4, max_edges=5))
@settings(max_examples=60, deadline=None)
def test_chain_determinants_consistent_everywhere(g):
    o = reference_orientation(g)
    basis = fundamental_cycles(g, o, spanning_forest(g))
    for a in enumerate_automorphisms(g):
        assert chain_determinant_check(g, o, basis, a).consistent


def test_verify_graph_loop_records(golden):
    records = verify_graph(golden["loop"], diagnostics=True)
    assert [(r.homological, r.combinatorial, r.agree) for r in records] == [
        (1, 1, True),
        (-1, -1, True),
    ]
    assert all(r.cycle_rank == 1 for r in records)
    assert all(r.factors is not None and r.factors.consistent for r in records)


def test_verify_graph_diagnostics_optional(golden):
    assert all(r.factors is None for r in verify_graph(golden["loop"]))


@given(multigraphs(max_vertices=4, max_edges=5))
@settings(max_examples=60, deadline=None)
def test_both_routes_agree(g):
    assert all(r.agree for r in verify_graph(g))


HAS_ODD = {
    "loop": True,
    "single_edge": False,
    "double_edge": True,
    "triangle": False,
    "path3": True,
    "path4": True,
    "loop_plus_edge": True,
    "two_edges_disjoint": False,
}


@pytest.mark.parametrize("name, expected", sorted(HAS_ODD.items()))
def test_has_odd_automorphism_goldens(name, expected):
    assert has_odd_automorphism(parse_graph(GOLDEN_TEXTS[name])) is expected


def test_two_isolated_vertices_are_odd():
    # the bare swap has vertex sign -1 and no edges to compensate
    assert has_odd_automorphism(parse_graph("v 2\n")) is True


def test_path5_flip_is_even():
    g = parse_graph("v 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n")
    assert has_odd_automorphism(g) is False


def test_sign_homomorphism_property(golden):
    for g in golden.values():
        o = reference_orientation(g)
        basis = fundamental_cycles(g, o, spanning_forest(g))
        auts = enumerate_automorphisms(g)
        comb = {a: combinatorial_sign(g, o, a) for a in auts}
        hom = {a: homological_sign_extended(g, o, basis, a) for a in auts}
        for a in auts:
            for b in auts:
                ab = compose(a, b)
                assert comb[ab] == comb[a] * comb[b]
                assert hom[ab] == hom[a] * hom[b]


def test_inverse_consistency(golden):
    from autsign import invert

    for g in golden.values():
        o = reference_orientation(g)
        basis = fundamental_cycles(g, o, spanning_forest(g))
        for a in enumerate_automorphisms(g):
            assert combinatorial_sign(g, o, a) * combinatorial_sign(
                g, o, invert(a)
            ) == 1
            assert homological_sign_extended(
                g, o, basis, a
            ) * homological_sign_extended(g, o, basis, invert(a)) == 1


@given(multigraphs(max_vertices=4, max_edges=5), st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_combinatorial_sign_orientation_independent(g, seed):
    reference = reference_orientation(g)
    rng = random.Random(seed)
    auts = enumerate_automorphisms(g)
    expected = [combinatorial_sign(g, reference, a) for a in auts]
    for _ in range(5):
        o = random_orientation(g, rng)
        assert [combinatorial_sign(g, o, a) for a in auts] == expected


@given(multigraphs(max_vertices=4, max_edges=5), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_homological_sign_orientation_independent(g, seed):
    # the cycle basis follows the orientation, but the determinant sign cannot
    o_ref = reference_orientation(g)
    basis_ref = fundamental_cycles(g, o_ref, spanning_forest(g))
    o_rand = random_orientation(g, random.Random(seed))
    basis_rand = fundamental_cycles(g, o_rand, spanning_forest(g))
    for a in enumerate_automorphisms(g):
        assert homological_sign_extended(
            g, o_rand, basis_rand, a
        ) == homological_sign_extended(g, o_ref, basis_ref, a)


@given(multigraphs(max_vertices=4, max_edges=5))
@settings(max_examples=40, deadline=None)
def test_homological_sign_basis_independent(g):
    o = reference_orientation(g)
    auts = enumerate_automorphisms(g)
    reference_signs = None
    for root in range(g.vertex_count):
        basis = fundamental_cycles(g, o, spanning_forest(g, root=root))
        signs = [homological_sign_extended(g, o, basis, a) for a in auts]
        if reference_signs is None:
            reference_signs = signs
        assert signs == reference_signs
