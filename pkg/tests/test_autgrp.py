from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleinfour.autgrp import (
    AutomorphismError,
    bracket_preservation_failure,
    commute,
    compose,
    diagram_automorphism,
    identity_map,
    inner_involution,
    involution_search,
    klein_four,
    torus_involution,
)
from kleinfour.chevalley import build_chevalley
from kleinfour.fixpoint import fixed_dimension
from kleinfour.rootsys import DiagramInvolution, diagram_involution

coroot_vec = st.lists(st.integers(-3, 3), min_size=6, max_size=6)


def test_zero_vector_gives_identity(e6):
    assert inner_involution(e6, [0] * 6).is_identity()


@pytest.mark.parametrize("H,dim", [([0, 1, 0, 0, 0, 0], 38), ([1, 0, 0, 0, 0, 1], 46)])
def test_sigma1_sigma2_fixed_dims(e6, H, dim):
    m = inner_involution(e6, H)
    assert m.squares_to_identity()
    assert fixed_dimension(e6, [m]) == dim


def test_inner_involution_entries_are_signs(e6, sigma1):
    for col in sigma1.columns:
        assert all(v in (1, -1) for v in col.values() if v)


def test_a1_half_coroot_negates_both_roots():
    alg = build_chevalley("A1")
    m = inner_involution(alg, [Fraction(1, 2)])
    e, f = alg.e((1,)), alg.e((-1,))
    assert m(e) == -e and m(f) == -f
    assert m(alg.h([1])) == alg.h([1])


def test_non_integral_pairing_rejected():
    alg = build_chevalley("A1")
    with pytest.raises(AutomorphismError):
        inner_involution(alg, [Fraction(1, 4)])


def test_omega_is_certified_involution(e6, omega):
    assert bracket_preservation_failure(omega) is None
    assert omega.squares_to_identity()
    assert not omega.is_identity()
    assert fixed_dimension(e6, [omega]) == 52


def test_identity_permutation_gives_identity(e6):
    assert diagram_automorphism(e6, DiagramInvolution(tuple(range(6)))).is_identity()


def test_compose_with_identity(e6, sigma1):
    assert compose(identity_map(e6), sigma1) == sigma1


def test_sigma4_is_an_involution(e6, omega, sigma1):
    s4 = compose(omega, sigma1)
    assert commute(omega, sigma1)
    assert s4.squares_to_identity()
    assert fixed_dimension(e6, [s4]) == 36


def test_torus_elements_add_exponents(e6, sigma1):
    s2 = inner_involution(e6, [1, 0, 0, 0, 0, 1])
    assert compose(sigma1, s2) == inner_involution(e6, [1, 1, 0, 0, 0, 1])


def test_commute_examples(e6, omega):
    s2 = inner_involution(e6, [1, 0, 0, 0, 0, 1])
    assert commute(omega, s2)
    assert not commute(omega, inner_involution(e6, [1, 0, 0, 0, 0, 0]))


def test_compose_rejects_other_algebra(e6):
    other = build_chevalley("E6", verify=False)
    with pytest.raises(AutomorphismError):
        compose(identity_map(e6), identity_map(other))


def test_klein_four_examples(e6, omega, sigma1):
    g = klein_four(omega, sigma1)
    assert len(g.elements) == 4
    s2 = inner_involution(e6, [1, 0, 0, 0, 0, 1])
    assert len(klein_four(sigma1, s2).nonidentity) == 3


@pytest.mark.parametrize("case", ["equal", "identity", "noncommuting"])
def test_klein_four_rejections(e6, omega, sigma1, case):
    a, b = {
        "equal": (sigma1, sigma1),
        "identity": (sigma1, identity_map(e6)),
        "noncommuting": (omega, inner_involution(e6, [1, 0, 0, 0, 0, 0])),
    }[case]
    with pytest.raises(AutomorphismError, match="Klein four axiom violated"):
        klein_four(a, b)


def test_inner_scan_has_two_fixed_dims(e6):
    found = involution_search(e6)
    assert len(found) == 63
    assert {fixed_dimension(e6, [m]) for m in found} == {38, 46}


def test_search_with_joint_dimension(e6, omega):
    assert involution_search(e6, must_commute_with=[omega], joint_fixed_dims=[([omega], 24)])


def test_search_can_be_empty(e6):
    assert involution_search(e6, fixed_dim=40) == []


@settings(max_examples=25, deadline=None)
@given(coroot_vec, st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_inner_involution_depends_on_parity_only(e6, H, shift):
    moved = [h + 2 * s for h, s in zip(H, shift)]
    assert inner_involution(e6, H) == inner_involution(e6, moved)


@settings(max_examples=25, deadline=None)
@given(coroot_vec, coroot_vec)
def test_equal_maps_iff_equal_parities(e6, H1, H2):
    rs = e6.root_system
    par = lambda H: [rs.pairing(s, H) % 2 for s in rs.simple_roots]
    assert (inner_involution(e6, H1) == inner_involution(e6, H2)) == (par(H1) == par(H2))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=6, max_size=6), st.lists(st.integers(0, 1), min_size=6, max_size=6))
def test_torus_involutions_form_a_group(e6, a, b):
    ta, tb = torus_involution(e6, a), torus_involution(e6, b)
    prod = compose(ta, tb)
    assert prod == torus_involution(e6, [(x + y) % 2 for x, y in zip(a, b)])
    assert commute(ta, tb)
    assert prod.squares_to_identity()


@pytest.mark.parametrize("name", ["A3", "D4", "D5", "A4"])
def test_diagram_automorphisms_of_other_types(name):
    alg = build_chevalley(name, verify=False)
    m = diagram_automorphism(alg, diagram_involution(alg.root_system))
    assert bracket_preservation_failure(m) is None
    assert m.squares_to_identity()


def test_x4_coweight_and_coroot_forms_agree(e6):
    # h_1 + h_6 has odd pairing exactly on the coweight directions 3 and 5
    a = torus_involution(e6, (0, 0, 1, 0, 1, 0))
    b = inner_involution(e6, [1, 0, 0, 0, 0, 1])
    assert a.matrix == b.matrix
