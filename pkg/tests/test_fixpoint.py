from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleinfour.autgrp import commute, compose, identity_map, inner_involution
from kleinfour.fixpoint import (
    IdentificationError,
    Subalgebra,
    brackets_vanish,
    fixed_dimension,
    fixed_subalgebra,
    identify_complex_type,
    killing_orthogonal,
    reductive_decompose,
    type_from_census,
)


def test_no_maps_gives_whole_algebra(e6):
    assert fixed_subalgebra(e6, []).dim == 78


def test_identity_fixes_everything(small_algebras):
    g2 = small_algebras["G2"]
    assert fixed_subalgebra(g2, [identity_map(g2)]).dim == 14


@pytest.mark.parametrize(
    "name,expected",
    [("A1", [("A", 1)]), ("A2", [("A", 2)]), ("B2", [("B", 2)]), ("G2", [("G", 2)]),
     ("A3", [("A", 3)]), ("C3", [("C", 3)]), ("D4", [("D", 4)])],
)
def test_whole_small_algebras_are_simple(small_algebras, name, expected):
    dec = reductive_decompose(Subalgebra.whole(small_algebras[name]))
    assert dec.type_labels() == expected
    assert dec.center.dim == 0


def test_whole_e6(e6):
    dec = reductive_decompose(Subalgebra.whole(e6))
    assert (dec.center.dim, [i.dim for i in dec.ideals], dec.type_labels()) == (0, [78], [("E", 6)])


def test_diagram_fixed_is_f4(e6, omega):
    sub = fixed_subalgebra(e6, [omega])
    assert sub.dim == 52
    assert identify_complex_type(sub) == ("F", 4)
    assert reductive_decompose(sub).rank == 4


@pytest.mark.parametrize(
    "H,summary,dims,center",
    [
        ([0, 1, 0, 0, 0, 0], "A5+A1", [35, 3], 0),
        ([1, 0, 0, 0, 0, 1], "D5+T1", [45], 1),
    ],
)
def test_inner_fixed_algebras(e6, H, summary, dims, center):
    dec = reductive_decompose(fixed_subalgebra(e6, [inner_involution(e6, H)]))
    assert dec.summary() == summary
    assert [i.dim for i in dec.ideals] == dims
    assert dec.center.dim == center


def test_x0_x1_gives_c3_plus_a1(e6, study):
    sub = fixed_subalgebra(e6, [study.x0, study.x1])
    assert sub.dim == 24
    dec = reductive_decompose(sub)
    assert dec.center.dim == 0
    assert [(i.dim, i.type_label) for i in dec.ideals] == [(21, ("C", 3)), (3, ("A", 1))]


def test_c3_census_has_six_long_roots(e6, study):
    # C3: 18 roots, the 6 long ones have twice the squared length of the short ones
    dec = reductive_decompose(fixed_subalgebra(e6, [study.x0, study.x1]))
    c3 = dec.ideals[0]
    assert c3.rank == 3 and c3.dim - c3.rank == 18
    assert type_from_census(3, [Fraction(1)] * 12 + [Fraction(2)] * 6) == ("C", 3)
    assert type_from_census(3, [Fraction(1)] * 6 + [Fraction(2)] * 12) == ("B", 3)


def test_ideals_are_orthogonal_closed_and_centerless(e6, study):
    dec = reductive_decompose(fixed_subalgebra(e6, [study.x0, study.x1]))
    a, b = dec.ideals
    assert killing_orthogonal(a.subalgebra, b.subalgebra)
    assert brackets_vanish(a.subalgebra, b.subalgebra)
    for ideal in dec.ideals:
        assert ideal.subalgebra.closure_failure() is None
        assert reductive_decompose(ideal.subalgebra).center.dim == 0


def test_center_commutes_with_everything(e6, x4):
    sub = fixed_subalgebra(e6, [x4])
    dec = reductive_decompose(sub)
    assert brackets_vanish(dec.center, sub)
    assert killing_orthogonal(dec.center, dec.ideals[0].subalgebra)


def test_identification_invariant_under_diagram_conjugation(e6, omega):
    # fixed(inner H_1) is not omega-stable, so the image is a genuinely different subalgebra
    sub = fixed_subalgebra(e6, [inner_involution(e6, [1, 0, 0, 0, 0, 0])])
    moved = sub.image(omega)
    assert not all(sub.contains(v) for v in moved.basis)
    before = reductive_decompose(sub)
    after = reductive_decompose(moved)
    assert before.summary() == after.summary()
    for ideal in before.ideals:
        assert identify_complex_type(ideal.subalgebra.image(omega)) == ideal.type_label


@pytest.mark.parametrize(
    "rank_,lengths",
    [(2, [Fraction(1)] * 5), (3, [Fraction(1)] * 6 + [Fraction(5)] * 6), (2, [Fraction(1), Fraction(2), Fraction(4)])],
)
def test_unmatched_census_raises(rank_, lengths):
    with pytest.raises(IdentificationError):
        type_from_census(rank_, lengths)


def test_non_simple_input_rejected(e6, sigma1):
    with pytest.raises(IdentificationError):
        identify_complex_type(fixed_subalgebra(e6, [sigma1]))


def test_fixed_subalgebra_is_closed(e6, study):
    assert fixed_subalgebra(e6, [study.x1]).closure_failure() is None


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_adding_maps_never_grows(pool, e6, data):
    maps = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3))
    extra = data.draw(st.sampled_from(pool))
    assert fixed_dimension(e6, maps + [extra]) <= fixed_dimension(e6, maps)


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_product_fixes_joint_fixed(pool, e6, data):
    a = data.draw(st.sampled_from(pool))
    b = data.draw(st.sampled_from([m for m in pool if commute(a, m)]))
    joint = fixed_subalgebra(e6, [a, b])
    prod = fixed_subalgebra(e6, [compose(a, b)])
    assert all(prod.contains(v) for v in joint.basis)
