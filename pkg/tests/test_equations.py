import json

import pytest

from mulpersist.catalog import catalog_by_id, catalog_csv, equation_catalog
from mulpersist.equations import (SUFFIX_DIGITS, SUFFIX_VALUES, TAU,
                                  generate_even_equations,
                                  generate_odd_equations, lc_eval,
                                  reconstruct_value, tau_of)


@pytest.mark.parametrize("d,count", [(1, 1), (3, 1), (5, 39), (7, 1), (9, 2)])
def test_generation_counts(d, count):
    assert len(generate_odd_equations(d)) == count


def test_generation_rejects_even():
    with pytest.raises(ValueError):
        generate_odd_equations(2)


def test_tau_self_consistency():
    # tau_h = 9 * ending / 5^h - 2^h, where ending is the forced decimal
    # suffix of an antecedent with h trailing fives
    assert tau_of(0) == -1
    for h in range(1, 5):
        assert tau_of(h) == 9 * SUFFIX_VALUES[h] // 5 ** h - 2 ** h
    for h in range(5):
        # SUFFIX_DIGITS stores a sorted multiset, so compare digit
        # multisets rather than positional order (75 ends in ...7,5)
        assert sorted(str(SUFFIX_VALUES[h] or "")) \
            == sorted(map(str, SUFFIX_DIGITS[h]))
    assert TAU == (-1, 7, 23, 19, 119)
    with pytest.raises(ValueError):
        tau_of(5)


def test_catalog_has_44_rows_and_unique_ids(catalog):
    eqs = equation_catalog()
    assert len(eqs) == 44
    assert len({eq.id for eq in eqs}) == 44
    per_d = {d: sum(1 for eq in eqs if eq.target_d == d)
             for d in (1, 3, 5, 7, 9)}
    assert per_d == {1: 1, 3: 1, 5: 39, 7: 1, 9: 1 + 1}


def test_catalog_vertices_consistent(catalog):
    assert catalog["5.23"].vertex_s == 3375
    assert catalog["5.24"].vertex_s == 59535
    assert catalog["5.21"].vertex_s == 1715
    assert catalog["1.01"].vertex_s == 1
    # vertex 59535 carries the widest equation: 7 coefficients, 8 positions
    widest = max(equation_catalog(), key=lambda e: e.k)
    assert (widest.vertex_s, widest.k + 1) == (59535, 8)


def test_equation_5_06_arity_finding(catalog):
    # named finding: the row has three unit coefficients, hence four
    # exponent positions — no arity discrepancy
    eq = catalog["5.06"]
    assert eq.coeffs == (1, 1, 1)
    assert eq.k + 1 == 4


def test_lc_eval_examples(catalog):
    assert lc_eval(catalog["1.01"], (1,)) == 9            # = 3^2
    assert lc_eval(catalog["5.12"], (1, 0)) == 243        # = 3^5
    assert lc_eval(catalog["5.23"], (4, 0, 3, 1, 2)) == 107163   # = 3^7 7^2
    assert 107163 == 3 ** 7 * 7 ** 2
    with pytest.raises(ValueError):
        lc_eval(catalog["5.23"], (1, 2))


def test_reconstruct_value(catalog):
    assert reconstruct_value(catalog["5.23"], 7, 2) == 59535
    assert reconstruct_value(catalog["5.01"], 2, 0) == 5
    assert reconstruct_value(catalog["7.01"], 2, 1) == 7
    with pytest.raises(ValueError):
        reconstruct_value(catalog["5.01"], 1, 0)


def test_serialization(catalog):
    payload = json.loads(catalog["5.23"].to_json())
    assert payload == {"id": "5.23", "d": 5, "s": 3375, "h": 1,
                       "coeffs": [1, 2, 2, 4], "tau": 7}
    csv = catalog_csv()
    assert csv.splitlines()[0] == "id,d,s,h,coeffs,tau"
    assert len(csv.splitlines()) == 45


def test_even_equations_stored_graphs():
    eqs = generate_even_equations(2)
    assert len(eqs) == 1117
    sample = [e for e in eqs if e.vertex_s == 112]
    assert {e.digits for e in sample} == {
        (2, 2, 2, 2, 7), (2, 2, 4, 7), (4, 4, 7), (2, 7, 8)}
    for e in sample:
        assert e.coeffs == tuple(9 * (x - 1) for x in e.digits)
    with pytest.raises(ValueError):
        generate_even_equations(6)
    with pytest.raises(ValueError):
        generate_even_equations(5)
