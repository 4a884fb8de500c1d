from fractions import Fraction

import pytest

from dclab import regression

CHECKS = regression.checks()


@pytest.mark.parametrize("check", CHECKS, ids=[f"{c.module}:{c.name}" for c in CHECKS])
def test_worked_example(check):
    (res,) = regression.run([check])
    assert res["ok"], f"expected {res['expected']}, got {res['actual']}"


def test_every_module_has_checks():
    assert {c.module for c in CHECKS} == set(regression.MODULES)


def test_perturbed_expectation_fails():
    c = CHECKS[0]
    (res,) = regression.run([regression.Check(c.module, c.name, c.expected + Fraction(1, 7), c.compute)])
    assert not res["ok"]


def test_crashing_check_is_reported():
    def boom():
        raise ArithmeticError("no")

    (res,) = regression.run([regression.Check("core", "crash", 1, boom)])
    assert not res["ok"] and res["actual"].startswith("error: ArithmeticError")


def test_show_is_deterministic():
    assert regression.show({(2,): Fraction(1, 2), (): 3}) == "{(): 3, (2): 1/2}"


def test_select_unknown_module():
    with pytest.raises(ValueError):
        regression.select("nope")
