from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hermitian_cascade.hermitian_catalog import parse_pair_label
from hermitian_cascade.milnorwood_consts import (PI, VOL, ZERO_DEGREE, FormalQuantity, UnitError,
                                                 bound_report, deg_canonical, deg_L_dual,
                                                 mw_bound, rewording_bound, toledo_of_degE0,
                                                 tube_bound)


def test_frozen_constants():
    assert deg_L_dual() == FormalQuantity(Fraction(1, 2), 1, -1)
    assert deg_canonical(2) == FormalQuantity(Fraction(3, 4), 1, -1)
    assert deg_canonical(3) == 2 * deg_L_dual()
    assert mw_bound(3) == 3 * VOL
    assert toledo_of_degE0(deg_L_dual()) == 2 * VOL
    assert tube_bound(3, 2) == Fraction(9, 4) * VOL
    assert tube_bound(2, 2) == Fraction(3, 2) * VOL
    assert tube_bound(5, 2) == 4 * VOL


def test_units_are_enforced():
    with pytest.raises(UnitError):
        VOL + PI
    with pytest.raises(UnitError):
        toledo_of_degE0(VOL)
    with pytest.raises(UnitError):
        VOL < PI
    with pytest.raises(UnitError):
        VOL * VOL
    assert ZERO_DEGREE + VOL == VOL
    assert str(Fraction(3, 2) * VOL / PI) == "3/2*vol*pi^-1"
    assert (VOL / PI).units == (1, -1)


def test_bound_domain():
    with pytest.raises(ValueError):
        tube_bound(2, 1)
    with pytest.raises(ValueError):
        tube_bound(2, 3, tube=False)
    with pytest.raises(ValueError):
        rewording_bound(0)


@pytest.mark.parametrize("label,n,tube,bound,strict", [
    ("E7", 2, True, "9/4*vol", True), ("SU(2,2)", 2, True, "3/2*vol", True),
    ("SU(2,2)", 5, True, "6/5*vol", True), ("E6", 2, False, None, False),
    ("Sp(8,R)", 3, True, "3*vol", True),
])
def test_bound_reports(label, n, tube, bound, strict):
    rep = bound_report(parse_pair_label(label), n)
    assert rep.as_dict()["tube_bound"] == bound
    assert rep.strict is strict
    assert rep.mw_bound == rep.p * VOL


@given(st.integers(1, 40), st.integers(2, 40))
def test_tube_bound_below_mw(p, n):
    tb = tube_bound(p, n)
    assert tb <= mw_bound(p)
    assert (tb < mw_bound(p)) is (p > 1 or n > 1)
    assert toledo_of_degE0(rewording_bound(p)) == mw_bound(p)


@given(st.fractions(max_denominator=10), st.fractions(max_denominator=10))
def test_degree_toledo_linear(a, b):
    da, db = FormalQuantity(a, 1, -1), FormalQuantity(b, 1, -1)
    assert toledo_of_degE0(da + db) == toledo_of_degE0(da) + toledo_of_degE0(db)
