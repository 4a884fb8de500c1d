from fractions import Fraction

import pytest

from dclab.core import RatPolynomial
from dclab.permgroups import Setting
from dclab.polynomiality import degree_bound, fit_window, normalizer


def test_degree_bounds():
    assert degree_bound(Setting.SYM, (2,), (2,), ()) == 2
    assert degree_bound(Setting.SYM, (2,), (3,), (2,)) == 1
    assert degree_bound(Setting.HECKE, (2,), (2,), ()) == 2
    assert degree_bound(Setting.HECKE, (2,), (2,), (3,)) == 0


def test_sym_fit():
    f = fit_window(Setting.SYM, (2,), (2,), ())
    n = RatPolynomial.n()
    assert f.window == [2, 3, 4]
    assert f.poly == n * (n - 1) * Fraction(1, 2)
    assert f.predicted_n == 5 and f.predicted == f.actual == 10
    assert f.ok


def test_hecke_fit_is_normalized():
    f = fit_window(Setting.HECKE, (2,), (2,), ())
    assert f.ok
    for m, v in f.values.items():
        assert v == f.poly(m)
    assert normalizer(Setting.HECKE, 3) == 48


def test_unsupported_setting():
    with pytest.raises(ValueError):
        fit_window(Setting.BN, ((), ()), ((), ()), ((), ()))
