import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import EXPECTED
from mulpersist.digits import height, target
from mulpersist.oracle import (brute_solve_equation, heights_and_targets,
                               scan_persistence, scan_persistence_grouped,
                               verify_graph_closure)

SMALL = ["1.01", "3.01", "7.01", "9.01", "9.02",
         "5.01", "5.02", "5.03", "5.04", "5.12", "5.21", "5.23"]


@pytest.mark.parametrize("eq_id", SMALL)
def test_brute_force_matches_corpus(catalog, eq_id):
    accepted = sorted((a, u, w) for a, u, w, v in EXPECTED[eq_id]
                      if v == "accepted")
    assert brute_solve_equation(catalog[eq_id], bound=12) == accepted
    everything = sorted((a, u, w) for a, u, w, v in EXPECTED[eq_id])
    assert brute_solve_equation(catalog[eq_id], bound=12,
                                require_r=False) == everything


def test_brute_force_guards(catalog):
    with pytest.raises(ValueError):
        brute_solve_equation(catalog["1.01"], bound=0)
    with pytest.raises(ValueError):
        brute_solve_equation(catalog["1.01"], bound=20)


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=10 ** 9))
def test_vector_heights_match_scalar(n):
    hs, ts = heights_and_targets(np.array([n], dtype=np.int64))
    assert int(hs[0]) == height(n)
    assert int(ts[0]) == target(n)


def test_scan_small():
    report = scan_persistence(100)
    assert report.max_height == 4          # 77 -> 49 -> 36 -> 18 -> 8
    assert report.witness == 77
    assert report.violations == ()
    assert sum(report.histogram) == 100
    assert report.histogram[0] == 10       # the single digits
    assert report.target_max[8] == 4


def test_scan_10k_and_grouped_agreement():
    report = scan_persistence(10 ** 4, chunk=3000)
    assert (report.max_height, report.witness) == (6, 6788)
    assert scan_persistence_grouped(10 ** 4) == (6, 6788)
    payload = json.loads(report.to_json())
    assert payload["max_height"] == 6
    assert payload["histogram"] == list(report.histogram)
    assert report.histogram_csv().startswith("height,count\n0,")


def test_scan_guards():
    with pytest.raises(ValueError):
        scan_persistence(0)
    with pytest.raises(ValueError):
        scan_persistence_grouped(1)


@pytest.mark.parametrize("d", [1, 3, 5, 7, 9, 2, 4])
def test_graph_closure(d):
    assert verify_graph_closure(d, 10 ** 5)
