from fractions import Fraction

import pytest

from kleinfour.chevalley import bracket, build_chevalley, compact_form, killing_form


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3", "C3", "D4", "F4"])
def test_jacobi_and_invariance(name, small_algebras):
    alg = small_algebras.get(name) or build_chevalley(name, verify=False)
    assert alg.jacobi_violations() == []
    assert alg.killing_invariance_violations() == []


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "F4"])
def test_bracket_antisymmetric(name):
    alg = build_chevalley(name, verify=False)
    for i in range(alg.dim):
        for j in range(alg.dim):
            a, b = alg.basis_element(i), alg.basis_element(j)
            assert bracket(a, b) == -bracket(b, a)


def test_e_alpha_e_minus_alpha_is_coroot(e6):
    rs = e6.root_system
    for r in rs.positive_roots:
        h = bracket(e6.e(r), e6.e(tuple(-c for c in r)))
        assert h == e6.h(rs.coroot(r))


def test_structure_constants_are_integral(e6):
    assert all(float(v).is_integer() for v in e6.N.values())
    # |N_ab| = p + 1 in the simply laced case
    rs = e6.root_system
    for (a, b), n in e6.N.items():
        p, _ = rs.string_bounds(a, b)
        assert abs(n) == p + 1


@pytest.mark.parametrize("name,dim", [("A1", 3), ("A2", 8), ("G2", 14), ("E6", 78)])
def test_compact_form_is_negative_definite(name, dim):
    alg = build_chevalley(name, verify=False)
    assert compact_form(alg).signature() == (0, dim)


def test_killing_form_a1():
    alg = build_chevalley("A1")
    h = alg.h([1])
    e, f = alg.e((1,)), alg.e((-1,))
    assert killing_form(h, h) == 8
    assert killing_form(e, f) == 4
    assert killing_form(e, e) == 0


def test_mixing_algebras_rejected():
    a = build_chevalley("A1", verify=False)
    b = build_chevalley("A1", verify=False)
    with pytest.raises(ValueError):
        bracket(a.h([1]), b.h([1]))


def test_element_arithmetic(e6):
    x = e6.e((1, 0, 0, 0, 0, 0))
    y = Fraction(1, 2) * x + x
    assert (y - x) == Fraction(1, 2) * x
    assert (x - x).is_zero()
