import json

import pytest

from conftest import record_rows
from corpus import EXPECTED
from mulpersist.solver import (_canonical_lifts, _coeff_groups,
                               apply_requirement_r, SolutionRecord,
                               learning_path, phase1_exhaust, prove_odd_target,
                               solve_equation)

SMALL = ["1.01", "3.01", "7.01", "9.01", "9.02",
         "5.01", "5.02", "5.03", "5.04", "5.12", "5.21", "5.23"]


def test_phase1_contains_true_solutions(catalog, index):
    hits = phase1_exhaust(catalog["5.23"], index)
    assert ((4, 0, 3, 1, 2), 7, 2) in hits
    assert ((1, 0), 5, 0) in phase1_exhaust(catalog["5.12"], index)
    assert phase1_exhaust(catalog["9.01"], index) == []


def test_phase1_tuples_are_canonical(catalog, index):
    eq = catalog["5.22"]                  # coeffs (1, 1, 1, 2, 2)
    for a, _, _ in phase1_exhaust(eq, index):
        assert a[1] >= a[2] >= a[3] and a[4] >= a[5]


def test_canonical_lifts_dedup_equal_positions(catalog):
    eq = catalog["5.22"]
    groups = _coeff_groups(eq)
    # positions 1-3 share coefficient and residue: lifting picks a count,
    # not a subset, so 2 (a0) * 4 (run of 3) * 2 * 2 alternatives
    lifts = _canonical_lifts((0, 3, 3, 3, 1, 0), 12, groups)
    assert len(lifts) == 2 * 4 * 2 * 2
    assert len(set(lifts)) == len(lifts)
    assert all(v[1] >= v[2] >= v[3] for v in lifts)


def test_learning_path_keeps_exact_solution(catalog, index):
    states = learning_path(catalog["5.23"], index=index)
    assert ((4, 0, 3, 1, 2), 7, 2) in states


def test_requirement_r_classification():
    rec = SolutionRecord((3, 1, 1), (True,) * 3, 2, 0, "unresolved")
    assert apply_requirement_r(rec).reason == "ANAD"
    rec = SolutionRecord((1, 1, 0), (True,) * 3, 2, 0, "unresolved")
    assert apply_requirement_r(rec).reason == "DNV_ORDER"
    rec = SolutionRecord((3, 1, 0), (True,) * 3, 2, 0, "unresolved")
    assert apply_requirement_r(rec).status == "accepted"
    rec = SolutionRecord((3, 1, 0), (False, True, True), 2, 0, "unresolved")
    assert apply_requirement_r(rec).status == "unresolved"
    # an unknown leading exponent cannot order-dismiss, but duplicates can
    rec = SolutionRecord((3, 1, 1), (False, True, True), 2, 0, "unresolved")
    assert apply_requirement_r(rec).reason == "ANAD"


@pytest.mark.parametrize("eq_id", SMALL)
def test_solution_sets_small(catalog, index, eq_id):
    sset = solve_equation(catalog[eq_id], index=index)
    assert record_rows(sset) == sorted(map(tuple, EXPECTED[eq_id]))


def test_solution_set_exports(catalog, index):
    sset = solve_equation(catalog["5.02"], index=index)
    assert sset.accepted_values() == {35, 135, 315}
    payload = json.loads(sset.to_json())
    assert payload["equation_id"] == "5.02"
    assert [r["value"] for r in payload["records"]] == [35, 135, 315]
    assert "f(x)=315" in sset.to_text()
    empty = solve_equation(catalog["5.13"], index=index)
    assert "(empty)" in empty.to_text()


@pytest.mark.parametrize("d", [1, 3, 7, 9])
def test_prove_trivial_targets(d, index):
    report = prove_odd_target(d, index=index)
    assert report.ok
    assert report.height_bound == 1
    assert report.checks[0].found_children == (d,)
    assert json.loads(report.to_json())["ok"] is True
    assert "closure verified" in report.to_text()
