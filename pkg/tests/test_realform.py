from fractions import Fraction

import pytest

from kleinfour.autgrp import chevalley_involution, compose, identity_map, inner_involution
from kleinfour.realform import (
    RealFormError,
    canonical_types,
    is_hermitian,
    label_real_form,
    noncompact_root_split,
    real_fixed_form,
    real_form,
)
from kleinfour.rootsys import highest_root, negate

# dim p for classical and exceptional real forms, from the standard tables
KNOWN_DIM_P = [
    (("B", 4), [("D", 4)], 0, "so(8,1)", 8),
    (("C", 4), [("B", 2), ("B", 2)], 0, "sp(2,2)", 16),
    (("C", 4), [("A", 3)], 1, "sp(8,R)", 20),
    (("C", 3), [("C", 2), ("A", 1)], 0, "sp(2,1)", 8),
    (("D", 5), [("A", 4)], 1, "so*(10)", 20),
    (("D", 5), [("D", 4)], 1, "so(8,2)", 16),
    (("A", 5), [("A", 3), ("A", 1)], 1, "su(4,2)", 16),
    (("A", 5), [("A", 4)], 1, "su(5,1)", 10),
    (("E", 6), [("D", 5)], 1, "e6(-14)", 32),
    (("E", 6), [("F", 4)], 0, "e6(-26)", 26),
    (("E", 6), [("A", 5), ("A", 1)], 0, "e6(2)", 40),
    (("E", 6), [("C", 4)], 0, "e6(6)", 42),
    (("F", 4), [("B", 4)], 0, "f4(-20)", 16),
    (("F", 4), [("F", 4)], 0, "f4(-52)", 0),
]

TYPE_DIM = {("B", 4): 36, ("C", 4): 36, ("C", 3): 21, ("D", 5): 45, ("A", 5): 35, ("E", 6): 78, ("F", 4): 52}


@pytest.mark.parametrize("ctype,k,center,name,dim_p", KNOWN_DIM_P, ids=[row[3] for row in KNOWN_DIM_P])
def test_catalog_labels(ctype, k, center, name, dim_p):
    dim_k = TYPE_DIM[ctype] - dim_p
    assert label_real_form(ctype, dim_p - dim_k, k, center) == name


def test_wrong_signature_is_unidentified():
    assert label_real_form(("B", 4), -18, [("D", 4)]).startswith("unidentified")


def test_unknown_compact_part_is_unidentified():
    assert label_real_form(("E", 6), 0, [("B", 3)]).startswith("unidentified")


def test_low_rank_coincidences():
    assert canonical_types([("C", 2), ("B", 1), ("D", 3)]) == ((("A", 3), ("B", 2), ("A", 1)), 0)
    assert canonical_types([("D", 1)], 1) == ((), 2)


def test_compact_a1(small_algebras):
    a1 = small_algebras["A1"]
    desc = real_form(a1, identity_map(a1))
    assert (desc.label, desc.signature, is_hermitian(desc)) == ("su(2)", -3, False)


def test_half_coroot_gives_split_a1(small_algebras):
    a1 = small_algebras["A1"]
    # exp(i pi h) is trivial on sl2; the involution needs h/2
    assert inner_involution(a1, [1]).is_identity()
    theta = inner_involution(a1, [Fraction(1, 2)])
    assert real_form(a1, theta).label == "sl(2,R)"
    data = noncompact_root_split(a1, theta)
    assert data.beta == (1,)
    assert set(data.noncompact_roots) == {(1,), (-1,)}


@pytest.mark.parametrize(
    "H,label,dim_k",
    [
        ([0, 1, 0, 0, 0, 0], "e6(2)", 38),
        ([1, 0, 0, 0, 0, 1], "e6(-14)", 46),
        ([0, 0, 0, 0, 0, 0], "e6(-78)", 78),
    ],
)
def test_inner_real_forms(e6, H, label, dim_k):
    desc = real_form(e6, inner_involution(e6, H))
    assert (desc.label, desc.dim_k) == (label, dim_k)
    assert desc.dim_k + desc.dim_p == 78
    assert desc.signature == 78 - 2 * dim_k


def test_outer_real_forms(e6, omega, sigma1):
    assert real_form(e6, omega).label == "e6(-26)"
    assert real_form(e6, omega).dim_k == 52
    sigma4 = compose(omega, sigma1)
    desc = real_form(e6, sigma4)
    assert (desc.label, desc.dim_k) == ("e6(6)", 36)


def test_e6_minus_14_is_hermitian(e6, x4):
    desc = real_form(e6, x4)
    assert desc.hermitian and desc.compact_center == 1
    assert desc.compact_label == "so(10)+so(2)"


def test_theta_must_be_involutive(e6, omega):
    # omega and inner(H_1) do not commute, so their product has order 4
    theta = compose(omega, inner_involution(e6, [1, 0, 0, 0, 0, 0]))
    with pytest.raises(RealFormError, match="not an involution"):
        real_form(e6, theta)


def test_conjugate_theta_same_descriptor(e6, omega):
    theta = inner_involution(e6, [1, 0, 0, 0, 0, 0])
    conj = compose(compose(omega, theta), omega)
    assert not conj.matrix == theta.matrix
    assert real_form(e6, conj) == real_form(e6, theta)


def test_gamma_theta_gives_k(e6, x4):
    desc = real_fixed_form(e6, x4, [x4])
    assert desc.label == "so(10)+so(2)"
    assert desc.dim == desc.dim_k == 46


def test_x0_gives_f4_minus_20(e6, study):
    desc = real_fixed_form(e6, study.x4, [study.x0])
    assert desc.label == "f4(-20)"
    assert desc.maximal_compact == (("B", 4),) and desc.dim_k == 36
    assert not is_hermitian(desc)


def test_klein_four_pair_is_sp21_su2(e6, study):
    desc = real_fixed_form(e6, study.x4, [study.x0, study.x1])
    assert desc.label == "sp(2,1)+su(2)"
    assert desc.dim_k == 16
    assert desc.compact_label == "so(5)+2su(2)"


def test_x0x1_gives_sp22(e6, study):
    desc = real_fixed_form(e6, study.x4, [study.x0x1])
    assert desc.label == "sp(2,2)"
    assert (desc.dim, desc.dim_k) == (36, 20)


def test_noncommuting_gamma_rejected(e6, omega):
    with pytest.raises(RealFormError, match="commute"):
        real_fixed_form(e6, omega, [inner_involution(e6, [1, 0, 0, 0, 0, 0])])


@pytest.fixture(scope="module")
def data(e6, x4):
    return noncompact_root_split(e6, x4)


class TestNoncompactRoots:
    def test_counts(self, data):
        assert (len(data.compact_roots), len(data.noncompact_roots)) == (40, 32)
        assert len(data.p_plus) == len(data.p_minus) == 16

    def test_negation_swaps_p_plus_and_minus(self, data):
        assert {negate(r) for r in data.p_plus} == set(data.p_minus)

    def test_beta_value(self, data):
        assert data.beta == (1, 1, 2, 2, 1, 1)

    def test_spec_candidate_is_not_a_root(self, e6):
        assert not e6.root_system.is_root((1, 2, 2, 3, 2, 0))
        assert highest_root(e6.root_system) == (1, 2, 2, 3, 2, 1)

    def test_beta_maximal_in_p_plus(self, e6, data):
        rs = e6.root_system
        assert data.beta in data.p_plus
        compact_pos = [r for r in data.compact_roots if rs.is_positive(r)]
        assert not any(rs.is_root(tuple(a + b for a, b in zip(data.beta, c))) for c in compact_pos)
        # every element of p_plus is reached from beta by subtracting compact positive roots
        reach, frontier = {data.beta}, [data.beta]
        while frontier:
            r = frontier.pop()
            for c in compact_pos:
                s = tuple(a - b for a, b in zip(r, c))
                if s in data.p_plus and s not in reach:
                    reach.add(s)
                    frontier.append(s)
        assert reach == set(data.p_plus)

    def test_parity_rule(self, e6, data):
        rs = e6.root_system
        h = [1, 0, 0, 0, 0, 1]
        assert all(rs.pairing(r, h) % 2 == 1 for r in data.noncompact_roots)
        assert all(rs.pairing(r, h) % 2 == 0 for r in data.compact_roots)

    def test_flip_negates_beta(self, data):
        flipped = data.flipped()
        assert flipped.beta == negate(data.beta)
        assert flipped.p_plus == data.p_minus


def test_outer_theta_rejected(e6, omega):
    with pytest.raises(RealFormError):
        noncompact_root_split(e6, omega)


def test_identity_theta_rejected(small_algebras):
    a2 = small_algebras["A2"]
    with pytest.raises(RealFormError):
        noncompact_root_split(a2, identity_map(a2))


def test_chevalley_involution_not_torus(small_algebras):
    a2 = small_algebras["A2"]
    with pytest.raises(RealFormError):
        noncompact_root_split(a2, chevalley_involution(a2))
