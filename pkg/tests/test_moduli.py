from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slopecalc import moduli as mo
from slopecalc.formulas import khosla_b0_over_cr
from slopecalc.grassmann import ParameterRange, castelnuovo


def mg(g, lam, *delta):
    delta = list(delta) + [0] * (g // 2 + 1 - len(delta))
    return mo.MgClass(g, lam, tuple(delta))


@given(st.integers(2, 12), st.fractions(max_denominator=9), st.fractions(max_denominator=9),
       st.fractions(max_denominator=9))
def test_pencil_pairing(g, a, b0, b1):
    cls = mg(g, a, -b0, -b1)
    assert mo.pair(mo.TestCurve("R", g), cls) == a - 12 * b0 + b1


@given(st.integers(4, 12), st.fractions(max_denominator=9), st.data())
def test_boundary_curves_miss_lambda(g, a, data):
    cls = mg(g, a)
    assert mo.pair(mo.TestCurve("C0", g), cls) == 0
    assert mo.pair(mo.TestCurve("C1", g), cls) == 0
    j = data.draw(st.integers(2, g // 2))
    assert mo.pair(mo.TestCurve("Cj", g, j=j), cls) == 0


def test_boundary_tables():
    cls = mg(6, 0, -1, -1, -1, -1)
    assert mo.pair(mo.TestCurve("C0", 6), cls) == 2 * 6 - 2 - 1
    assert mo.pair(mo.TestCurve("C1", 6), cls) == 2 * 6 - 4
    assert mo.pair(mo.TestCurve("Cj", 6, j=3), cls) == 4


def test_pairing_errors():
    with pytest.raises(mo.UnknownCurve):
        mo.pair(mo.TestCurve("C7", 4), mg(4, 1))
    with pytest.raises(mo.SpaceMismatch):
        mo.pair(mo.TestCurve("R", 5), mg(4, 1))
    with pytest.raises(mo.SpaceMismatch):
        mo.pair(mo.TestCurve("C0n", 4, 1), mg(4, 1))


def test_mg_class_shape():
    with pytest.raises(ValueError):
        mo.MgClass(4, 1, (0, 0))
    c = mg(4, 17, -2, -14, -18)
    assert c.b(0) == 2 and c.scale(2).lam == 34
    with pytest.raises(mo.UnknownCoefficient):
        mo.MgClass(4, 1, (-1, -1, None)).b(2)


def test_slope():
    assert mo.slope(mg(4, 17, -2, -14, -18)) == (Fraction(17, 2), Fraction(17, 2))
    assert mo.slope(mg(4, 17, -2, -1, -18)) == (Fraction(17, 2), Fraction(17))
    s0, smin = mo.slope(mg(4, 17, -2, 0, -18))
    assert s0 == Fraction(17, 2) and smin == mo.Undefined(1)
    with pytest.raises(mo.NonpositiveLambda):
        mo.slope(mg(4, 0, -2))
    with pytest.raises(mo.ZeroB0):
        mo.slope(mg(4, 3, 0, -1))


def test_mgn_aliases():
    c = mo.MgnClass(5, 1, mo.Coef(Fraction(1)), mo.Coef(Fraction(0)), mo.Coef(Fraction(-1)),
                    {(1, 1): -3})
    assert c.delta(4, 0).value == -3
    assert c.b(1, 1) == 3
    assert c.delta(2, 1).status == mo.UNKNOWN
    with pytest.raises(ValueError):
        mo.MgnClass(5, 1, mo.Coef(Fraction(1)), mo.Coef(Fraction(0)), mo.Coef(Fraction(0)),
                    {(1, 1): -3, (4, 0): -2})
    with pytest.raises(ValueError):
        c.delta(0, 1)


def test_mgn_sum_and_scale():
    a = mo.bn_class(6)
    b = mo.w_class(6)
    s = a.scale(2) + b
    assert s.lam.value == 2 * 9 - 1
    assert s.b(1, 1) == 2 * 5 + 15
    with pytest.raises(mo.SpaceMismatch):
        a + mo.bn_class(5)


def test_reference_classes():
    bn6 = mo.bn_class(6)
    assert (bn6.lam.value, bn6.d_irr.value, bn6.delta(1, 1).value) == (9, Fraction(-7, 6), -5)
    w6 = mo.w_class(6)
    assert (w6.psi.value, w6.delta(1, 1).value) == (21, -15)
    assert all(mo.w_class(g).lam.value == -1 for g in range(2, 12))


def test_marked_curve_tables():
    cls = mo.w_class(5)
    # C0n . W = 0 + delta_{1:0} coefficient + psi, and delta_{1:0} = delta_{4:1}
    assert mo.pair(mo.TestCurve("C0n", 5, 1), cls) == cls.delta(4, 1).value + cls.psi.value
    j = 3
    want = cls.psi.value + cls.delta(5 - j, 1).value - (2 * j - 1) * cls.delta(j, 1).value
    assert mo.pair(mo.TestCurve("Ctilde", 5, 1, j), cls) == want


def test_lin_normalizations():
    mu, nu = mo.lin_mu_nu(4, 2)
    assert nu == Fraction(8, 33)
    with pytest.raises(mo.DegenerateDenominator):
        mo.lin_mu_nu(1, 1)
    for r in range(2, 5):
        for s in range(2, 4):
            b = mo.lin_bridge(r, s)
            assert b["mu_ok"] and b["nu_ok"], (r, s)
            assert b["d+r(g-1)"] == b["rs(r+2)"]
            assert b["mu_curve_ok"], (r, s)
    b = mo.lin_bridge(2, 2)
    assert b["nu_pointedbn"] / b["nu"] == castelnuovo(6, 2, 6)


@pytest.mark.parametrize("s", [2, 3, 4])
def test_khosla_pairing_dominates_b0(s):
    b0 = khosla_b0_over_cr(s)
    for j in mo.khosla_range(s):
        assert mo.khosla_bj_via_pairing(s, j) >= b0


def test_khosla_range_checks():
    assert list(mo.khosla_range(2)) == [5, 6]
    with pytest.raises(ParameterRange):
        mo.khosla_bj_via_pairing(2, 4)
    with pytest.raises(ParameterRange):
        mo.khosla_bj_via_pairing(1, 2)
