from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopecalc import brillnoether as bn
from slopecalc import formulas as fm
from slopecalc.combinat import enumerate_ramseqs
from slopecalc.grassmann import DegreeMismatch, ParameterRange, castelnuovo

S22 = bn.BNSetup(2, 2)


def test_relations():
    assert bn.GAMMA * bn.GAMMA == -2 * bn.ETA * bn.THETA
    assert bn.ETA * bn.ETA == bn.CPic()
    assert bn.ETA * bn.GAMMA == bn.CPic()
    assert bn.GAMMA ** 3 == bn.CPic()
    assert (2 * bn.GAMMA + 3 * bn.ETA) * bn.GAMMA == -4 * bn.ETA * bn.THETA


keys = st.tuples(st.integers(0, 2), st.integers(0, 3), st.integers(0, 3),
                 st.lists(st.integers(0, 3), max_size=3).map(tuple))
elements = st.dictionaries(keys, st.integers(-5, 5), max_size=6).map(bn.CPic)


@given(elements)
def test_normal_form_idempotent(x):
    assert bn.CPic(x.terms) == x
    for (e, c, t, m) in x.terms:
        assert e <= 1 and c <= 1 and not (e and c)
        assert list(m) == sorted(m) and 0 not in m


@given(elements, elements, elements)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def vandermonde_closed(a):
    n = len(a)
    num = prod((a[l] - a[j] for j in range(n) for l in range(j)), start=1)
    return Fraction(num, prod(factorial(x + n - 1) for x in a))


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_harris_tu_against_reciprocal_vandermonde(r, s, data):
    setup = bn.BNSetup(r, s)
    exps = data.draw(st.lists(st.integers(0, 4), min_size=r + 1, max_size=r + 1))
    shifted = [s - 1 + e - j for j, e in enumerate(exps)]
    if min(shifted) < 0:
        return
    deg, coef = bn.harris_tu_monomial(exps, setup)
    assert deg == (r + 1) * (s - 1) + sum(exps)
    assert coef == vandermonde_closed(shifted)


def test_harris_tu_pencil():
    # r=1, s=2: the 2x2 determinant of 1/1!, 1/2! over 1/0!, 1/1!
    deg, coef = bn.harris_tu_monomial((0, 0), bn.BNSetup(1, 2))
    assert (deg, coef) == (2, Fraction(1, 2))


def test_harris_tu_negative_factorials():
    # shift 0: entries below the diagonal are 1/(negative)! = 0, leaving a unit triangle
    assert bn.harris_tu_monomial((0, 0, 0), bn.BNSetup(2, 1)) == (0, 1)
    # exponents (0, 1) repeat the shifted row, so the determinant dies
    assert bn.harris_tu_monomial((0, 1), bn.BNSetup(1, 3))[1] == 0


def degree_r_monomials(r):
    for t in range(r + 1):
        for k in range(1, r - t + 1):
            for parts in enumerate_ramseqs(k - 1, 1, r + 1, r - t):
                yield t, parts
    yield r, ()


@pytest.mark.parametrize("r,s", [(2, 2), (3, 2), (2, 3)])
def test_chern_numbers_are_integers(r, s):
    setup = bn.BNSetup(r, s)
    for t, parts in degree_r_monomials(r):
        x = bn.THETA ** t
        for i in parts:
            x = x * bn.chern(i, setup)
        assert bn.chern_number(x, setup).denominator == 1, (t, parts)


def test_c1_squared_by_hand():
    # e_1^2 in three variables: squares once, mixed pairs twice
    by_hand = {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1, (1, 1, 0): 2, (1, 0, 1): 2, (0, 1, 1): 2}
    top = S22.g_curve
    want = Fraction(0)
    for exps, k in by_hand.items():
        deg, coef = bn.harris_tu_monomial(exps, S22)
        if deg == top:
            want += k * coef
    c1 = bn.chern(1, S22)
    assert bn.chern_number(c1 * c1, S22) == want * factorial(top)


def test_chern_number_degree_check():
    with pytest.raises(DegreeMismatch):
        bn.chern_number(bn.chern(1, S22), S22)
    with pytest.raises(ValueError):
        bn.chern_number(bn.ETA * bn.chern(1, S22), S22)


@pytest.mark.parametrize("r,s", [(1, 2), (2, 2), (3, 2), (2, 3), (4, 3)])
def test_top_chern_class(r, s):
    setup = bn.BNSetup(r, s)
    cr = bn.chern_number(bn.chern(r, setup), setup)
    assert cr == bn.top_chern_constant(setup) * factorial(setup.g_curve)
    assert cr == castelnuovo(setup.g, r, setup.d)


@pytest.mark.parametrize("r", range(2, 6))
@pytest.mark.parametrize("s", range(2, 5))
def test_vandermonde_identities(r, s):
    report = bn.verify_vandermonde(bn.BNSetup(r, s))
    assert len(report) == 5
    assert all(status == "equal" for _, _, _, status in report), report


def test_vandermonde_needs_r_two():
    with pytest.raises(ParameterRange):
        bn.verify_vandermonde(bn.BNSetup(1, 2))


def test_x_and_y_classes():
    X, Y = bn.class_X(S22), bn.class_Y(S22)
    assert X.coefficient(e=1, m=(1,)) == 20
    assert X.coefficient(c=1, m=(1,)) == 2
    assert Y.coefficient(c=1, m=(1,)) == 1
    assert X.coefficient(m=(2,)) == Y.coefficient(m=(2,)) == 1
    assert X.coefficient(e=1, t=1) == -6


def test_restrictions():
    g, d = S22.g, S22.d
    assert bn.g0b_restriction(2, "Y", S22) == -4 * bn.THETA + bn.ETA
    assert bn.g0b_restriction(2, "X", S22) == -4 * bn.THETA - (2 * g - 4) * bn.ETA - 2 * (d * bn.ETA + bn.GAMMA)
    assert bn.g0b_restriction(1, "X", S22) == -bn.chern(1, S22)


def test_odd_classes_integrate_to_zero():
    x = bn.GAMMA * bn.chern(2, S22)
    assert bn.integrate(x, S22) == 0
    assert bn.integrate(bn.chern(1, S22) * bn.chern(2, S22), S22) == 0
    assert bn.integrate(bn.ETA * bn.chern(2, S22), S22) == bn.chern_number(bn.chern(2, S22), S22)


def test_h_expansion_matches_binomial():
    for s in range(1, 4):
        for i in range(4):
            expanded, closed = bn.h_i2_coefficient(s, i)
            assert expanded == closed


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("i", [0, 1, 2])
def test_test_curves_reproduce_koszul_slope(s, i):
    A, B0, B1 = bn.koszul_ABB(s, i)
    assert A / B0 == fm.koszul_slope(s, i)
    assert A - 12 * B0 + B1 == 0


def test_koszul_small_values():
    A, B0, _ = bn.koszul_ABB(2, 0)
    assert A / B0 == 7
    A, B0, _ = bn.koszul_ABB(1, 1)
    assert A / B0 == 8


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("s", [2, 3])
def test_gp_chains(r, s):
    assert bn.gp_b1(r, s) == bn.gp_b1_closed(r, s)
    assert bn.gp_b0(r, s) == bn.gp_b0_closed(r, s)
