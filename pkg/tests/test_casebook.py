import copy
import json

import pytest

from kleinfour import casebook
from kleinfour.casebook import CaseReport, Identification
from kleinfour.fixpoint import fixed_dimension


def test_realized_fixed_dimensions(study):
    real = casebook.realize_case_study(study)
    assert {k: r.fixed_dim for k, r in real.items()} == {"x0": 52, "x1": 38, "x4": 46, "Gamma": 24, "Gamma'": 36}
    assert all(r.certified for r in real.values())


def test_x1_commutes_with_x0_and_x4(study):
    from kleinfour.autgrp import commute

    assert commute(study.x1, study.x0) and commute(study.x1, study.x4)
    assert fixed_dimension(study.alg, [study.x0, study.x1]) == 24


@pytest.fixture(scope="module")
def idents(report):
    return {r["subject"]: r for r in report.identifications}


@pytest.mark.parametrize(
    "subject,label",
    [("g^x0", "f4(-20)"), ("g^x1", "su(4,2)+su(2)"), ("g^(x0*x1)", "sp(2,2)")],
)
def test_three_fixed_form_rows(idents, subject, label):
    row = idents[subject]
    assert row["computed_label"] == label
    assert row["match"]


def test_three_fixed_form_compact_parts(idents):
    assert idents["g^x0"]["computed"]["compact_label"] == "so(9)"
    assert idents["g^(x0*x1)"]["computed"]["compact_label"] == "2so(5)"
    assert idents["g^(x0*x1)"]["computed"]["dim_k"] == 20


def test_fixed_form_function_matches_report(study, idents):
    rows = casebook.verify_lemma32(study)
    assert [r.to_dict() for r in rows] == [idents[r.subject] for r in rows]


def test_klein_four_pair_row(idents):
    pair = idents["g^Gamma, Gamma = <x0, x1>"]
    assert pair["match"]
    computed = pair["computed"]
    assert (computed["dim"], computed["signature"], computed["dim_k"]) == (24, -8, 16)
    assert computed["maximal_compact"] == ["B2", "A1", "A1"]
    scan = next(r for r in idents.values() if r["subject"].startswith("compact Klein four"))
    assert scan["match"] and scan["computed_label"] == "absent"
    assert "not covered" in scan["scope"]


def test_four_holomorphic_pairs(study):
    labels = sorted(d.label for d in casebook.enumerate_holomorphic_pairs(study))
    assert labels == sorted(casebook.HOLOMORPHIC_CLAIM)


def test_holomorphic_pairs_are_noncompact(study):
    assert all(d.dim_k < d.dim for d in casebook.enumerate_holomorphic_pairs(study))


def test_gamma_prime_is_so81(study):
    group, desc = study.gamma_prime
    assert desc.label == "so(8,1)"
    assert (desc.dim, desc.signature, desc.complex_type) == (36, -20, (("B", 4),))
    assert desc.compact_label == "so(8)"


def test_center_of_k_vector(study):
    assert study.k_center.dim == 1
    assert study.k_center.contains(study.z)


def test_report_passes(report):
    assert report.ok, report.mismatches()
    assert report.surviving_pairs == [["e6(-14)", "so(8,1)"]]


def test_report_criteria(report):
    rows = {r["subject"]: r for r in report.criteria}
    triple = [rows[f"sigma(beta) != -beta for sigma = {n}"]["result"] for n in ("x0", "x1", "x0*x1")]
    assert triple == [True, True, False]
    assert all(rows[f"sigma(beta) != -beta for sigma = {n}"]["flipped_convention"] == v
               for n, v in zip(("x0", "x1", "x0*x1"), triple))
    verdicts = [r for r in report.criteria if r.get("result") == "OBSTRUCTED"]
    assert len(verdicts) == 1 and "Gamma = <x0, x1>" in verdicts[0]["subject"]


def test_imported_facts_flagged(report):
    assert report.imported
    assert all(f["status"] == casebook.IMPORTED for f in report.imported)
    assert casebook.IMPORTED in report.final_verdict


def test_report_names_surviving_pair(report):
    assert "(e6(-14), so(8,1))" in report.final_verdict.replace("(g, g^Gamma) = ", "")


def test_exclusion_facts(report):
    assert len(report.facts) == 6
    assert all(f["match"] for f in report.facts)
    counts = [f["tau_checked"] for f in report.facts if "tau_checked" in f]
    assert counts and all(c > 0 for c in counts)


def test_json_round_trip(report):
    again = CaseReport.from_dict(json.loads(report.to_json()))
    assert again.to_json() == report.to_json()
    assert again == CaseReport.from_dict(report.to_dict())


def test_report_is_deterministic(report, study):
    assert casebook.verify_lemma17_thm18(study).to_json() == report.to_json()


def test_false_flag_fails_the_report(report):
    d = copy.deepcopy(report.to_dict())
    d["identifications"][0]["match"] = False
    broken = CaseReport.from_dict(d)
    assert not broken.ok
    assert broken.mismatches() == [d["identifications"][0]["subject"]]


def test_identification_match_logic():
    row = Identification("x", {"label": "a", "dim": 3}, {"label": "a", "dim": 4})
    assert not row.match
    assert row.to_dict()["claimed_label"] == "a"
    assert Identification("x", {"label": "a"}, {"label": "a"}).match
