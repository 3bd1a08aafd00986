import pytest

from mulpersist.constants import (LEARN_SCHEDULE, M12, M24, M48, M_FINAL,
                                  ORD_FINAL_3, ORD_FINAL_7, ConstantError,
                                  multiplicative_order, verify_constants)


def test_verify_constants_all_pass():
    checks = verify_constants()
    assert len(checks) >= 40
    assert len(checks) == len(set(checks))


def test_moduli_are_repunit_cofactors():
    for t, m in ((12, M12), (24, M24), (48, M48)):
        assert m * 27 * 7 == 10 ** t - 1


def test_final_modulus_orders():
    assert M_FINAL == 2 ** 9 * 5 ** 6
    assert pow(3, ORD_FINAL_3, M_FINAL) == 1
    assert pow(7, ORD_FINAL_7, M_FINAL) == 1
    assert pow(3, ORD_FINAL_3 // 2, M_FINAL) != 1
    assert pow(7, ORD_FINAL_7 // 2, M_FINAL) != 1


def test_schedule_shape():
    assert len(LEARN_SCHEDULE) == 5
    assert LEARN_SCHEDULE[-1].learn_u_mod == 39600000
    assert LEARN_SCHEDULE[-1].learn_w_mod == 1440000
    assert LEARN_SCHEDULE[0].p == 73 and LEARN_SCHEDULE[3].p == 17


def test_multiplicative_order():
    assert multiplicative_order(10, M12, 12) == 12
    assert multiplicative_order(3, 73, 72) == 12
    with pytest.raises(ValueError):
        multiplicative_order(3, 73, 7)          # not a group-order multiple


def test_constant_error_type():
    assert issubclass(ConstantError, AssertionError)
