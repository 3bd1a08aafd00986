from hypothesis import given
from hypothesis import strategies as st

import pytest

from mulpersist.digits import (digit_product, digit_product_str, height,
                               target, trajectory)


def test_digit_product_examples():
    assert digit_product(0) == 0
    assert digit_product(7) == 7
    assert digit_product(10) == 0
    assert digit_product(999) == 729
    assert digit_product(2677889) == 2 * 6 * 7 * 7 * 8 * 8 * 9
    assert digit_product(77) == 49


def test_digit_product_rejects_negative():
    with pytest.raises(ValueError):
        digit_product(-1)
    with pytest.raises(ValueError):
        digit_product_str(-5)


@given(st.integers(min_value=0, max_value=10 ** 30))
def test_digit_product_routes_agree(n):
    assert digit_product(n) == digit_product_str(n)


@given(st.integers(min_value=0, max_value=10 ** 12))
def test_single_digit_fixed_points(n):
    assert (height(n) == 0) == (n < 10)
    if n >= 10:
        assert target(digit_product(n)) == target(n)
        assert height(n) == 1 + height(digit_product(n))


def test_trajectory_structure():
    t = trajectory(77)
    assert t.steps == (77, 49, 36, 18, 8)
    assert t.height == 4
    assert t.target == 8
    assert trajectory(5).steps == (5,)
    assert trajectory(5).height == 0


def test_known_heights():
    # smallest integers of each height
    for h, n in enumerate([1, 10, 25, 39, 77, 679, 6788, 68889, 2677889]):
        assert height(n) == h
        if h:
            assert all(height(m) < h for m in range(n - 20, n))


def test_height_8_witness_is_minimal():
    assert height(2677889) == 8
    assert target(2677889) == 0
