import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kleinfour.rootsys import (
    RootSystemError,
    build_root_system,
    cartan_matrix,
    diagram_involution,
    highest_root,
    negate,
    reflection_orbit_roots,
)

# |Phi| for each type, standard values
ROOT_COUNTS = [
    ("A1", 2), ("A2", 6), ("A5", 30), ("B2", 8), ("B4", 32), ("C3", 18), ("C4", 32),
    ("D4", 24), ("D5", 40), ("E6", 72), ("E7", 126), ("E8", 240), ("F4", 48), ("G2", 12),
]

TYPES = [t for t, _ in ROOT_COUNTS if t not in ("E8",)]


@pytest.mark.parametrize("name,count", ROOT_COUNTS)
def test_root_counts(name, count):
    rs = build_root_system(name)
    assert len(rs.roots) == count
    assert len(rs.positive_roots) == count // 2


@pytest.mark.parametrize("name", TYPES)
def test_roots_match_reflection_orbit(name):
    rs = build_root_system(name)
    assert set(rs.roots) == reflection_orbit_roots(rs.cartan)


def test_e6_facts():
    rs = build_root_system(("E", 6))
    assert rs.dimension == 78
    assert max(rs.heights) == 11
    assert highest_root(rs) == (1, 2, 2, 3, 2, 1)


def test_a1_highest_root():
    assert highest_root(build_root_system("A1")) == (1,)


def test_d5_highest_root():
    # one coefficient 1 at each end of the chain, 2 in the middle
    assert highest_root(build_root_system("D5")) == (1, 2, 2, 1, 1)


def test_e6_diagram_involution():
    rs = build_root_system("E6")
    inv = diagram_involution(rs)
    assert inv.one_based() == {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
    assert all(rs.is_root(inv.apply(r)) for r in rs.roots)


@pytest.mark.parametrize("name", ["B3", "C3", "F4", "G2", "E7"])
def test_identity_diagram_involution(name):
    assert diagram_involution(build_root_system(name)).is_identity


@pytest.mark.parametrize("bad", ["E9", "F3", "G3", "B1", "X4", "E", "4A"])
def test_invalid_types_rejected(bad):
    with pytest.raises(RootSystemError):
        build_root_system(bad)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_closed_under_negation_and_reflection(name, data):
    rs = build_root_system(name)
    r = data.draw(st.sampled_from(rs.roots))
    i = data.draw(st.integers(0, rs.rank - 1))
    assert rs.is_root(negate(r))
    assert rs.is_root(rs.reflect(r, i))
    assert all(c >= 0 for c in r) or all(c <= 0 for c in r)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_coroot_pairing_is_two(name, data):
    rs = build_root_system(name)
    r = data.draw(st.sampled_from(rs.roots))
    assert rs.pairing(r, rs.coroot(r)) == 2


def test_cartan_matrix_e6_branch_node():
    cm = cartan_matrix("E", 6)
    # node 2 attaches to node 4
    assert cm[1][3] == -1 and cm[1][2] == 0
