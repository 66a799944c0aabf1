from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from kleinfour.linalg import (
    Span,
    charpoly_is_monomial,
    charpoly_mod,
    intersect,
    matmul,
    nilpotent_by_image_chain,
    nullspace,
    power_is_zero,
    rank,
    rref,
    solve_in_basis,
    symmetric_signature,
)

small_ints = st.integers(min_value=-4, max_value=4)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small_ints, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sympy.Matrix(m).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_is_kernel_of_right_size(m):
    ncols = len(m[0])
    ns = nullspace(m, ncols)
    assert len(ns) == ncols - rank(m)
    for v in ns:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_reduced(m):
    red, piv = rref(m)
    assert len(red) == len(piv)
    for r, p in zip(red, piv):
        assert r[p] == 1
        assert all(other[p] == 0 for other in red if other is not r)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_signature_matches_numpy(m):
    sym = [[m[i][j] + m[j][i] for j in range(len(m))] for i in range(len(m))]
    eig = np.linalg.eigvalsh(np.array(sym, dtype=float))
    expected = (int((eig > 1e-9).sum()), int((eig < -1e-9).sum()), int((abs(eig) <= 1e-9).sum()))
    assert symmetric_signature(sym) == expected


def test_span_membership_and_solve():
    sp = Span(3, [[1, 1, 0], [0, 1, 1]])
    assert sp.dim == 2
    assert sp.contains([1, 2, 1])
    assert not sp.contains([1, 0, 0])
    assert not sp.add([2, 3, 1])
    coeffs = solve_in_basis([[1, 1, 0], [0, 1, 1]], [1, 2, 1])
    assert coeffs == [1, 1]
    assert solve_in_basis([[1, 1, 0]], [0, 0, 1]) is None


def test_intersect():
    a = [[1, 0, 0], [0, 1, 0]]
    b = [[0, 1, 0], [0, 0, 1]]
    inter = intersect(a, b, 3)
    assert len(inter) == 1
    assert Span(3, inter).contains([0, 1, 0])


def _strict_upper(n, seed):
    rng = np.random.default_rng(seed)
    return [[int(rng.integers(-3, 4)) if j > i else 0 for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("seed", range(5))
def test_nilpotency_tests_agree_on_conjugated_nilpotents(seed):
    n = 6
    u = _strict_upper(n, seed)
    # conjugate by a unimodular matrix so the pattern is hidden
    p = [[1 if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]
    pinv = [[(-1) ** (j - i) if j >= i else 0 for j in range(n)] for i in range(n)]
    m = [[int(x) for x in row] for row in matmul(matmul(p, u), pinv)]
    assert nilpotent_by_image_chain(m)
    assert power_is_zero(m, n)
    assert charpoly_is_monomial(m)


def test_nilpotency_tests_reject_invertible():
    m = [[0, 1], [1, 0]]
    assert not nilpotent_by_image_chain(m)
    assert not power_is_zero(m, 2)
    assert not charpoly_is_monomial(m)


def test_charpoly_mod_matches_sympy():
    m = [[2, 1, 0], [0, 3, 4], [5, 0, 1]]
    p = 101
    # constant term first
    expected = [int(c) % p for c in reversed(sympy.Matrix(m).charpoly().all_coeffs())]
    assert charpoly_mod(m, p) == expected
