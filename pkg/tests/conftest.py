import pytest

from kleinfour import casebook
from kleinfour.autgrp import commute, inner_involution
from kleinfour.chevalley import build_chevalley
from kleinfour.crit import cartan_adapted


@pytest.fixture(scope="session")
def e6():
    return casebook.e6_algebra()


@pytest.fixture(scope="session")
def study():
    return casebook.case_study()


@pytest.fixture(scope="session")
def omega(study):
    return study.x0


@pytest.fixture(scope="session")
def x4(study):
    return study.x4


@pytest.fixture(scope="session")
def sigma1(e6):
    return inner_involution(e6, [0, 1, 0, 0, 0, 0])


@pytest.fixture(scope="session")
def roots(study):
    return study.roots


@pytest.fixture(scope="session")
def pool(study):
    return casebook._scan_pool(study)


@pytest.fixture(scope="session")
def adapted(study, pool):
    """Involutions commuting with x4 for which the standard Cartan is adapted."""
    return [m for m in pool if commute(m, study.x4) and cartan_adapted(study.x4, m)]


@pytest.fixture(scope="session")
def report(study):
    return casebook.verify_lemma17_thm18(study)


@pytest.fixture(scope="session")
def small_algebras():
    return {name: build_chevalley(name, verify=False) for name in ("A1", "A2", "B2", "G2", "A3", "C3", "D4")}


ACCEPTANCE: dict[int, bool] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ACCEPTANCE[n] else 'FAIL'}")
