from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopecalc import grassmann as gr
from slopecalc.combinat import enumerate_ramseqs, partition


# --- oracle: Schur polynomials as sums over semistandard tableaux ---

def ssyt_weights(lam, n):
    """Weights x^T of all semistandard tableaux of shape lam with entries 1..n."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    out = {}
    fill = {}

    def rec(k):
        if k == len(cells):
            w = [0] * n
            for v in fill.values():
                w[v - 1] += 1
            out[tuple(w)] = out.get(tuple(w), 0) + 1
            return
        i, j = cells[k]
        lo = 1
        if j:
            lo = max(lo, fill[(i, j - 1)])
        if i:
            lo = max(lo, fill[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            fill[(i, j)] = v
            rec(k + 1)
        fill.pop((i, j), None)

    rec(0)
    return out


def poly_mul(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            m = tuple(u + v for u, v in zip(a, b))
            out[m] = out.get(m, 0) + x * y
    return out


def schur_expand(poly, n):
    # peel off the lex-largest monomial, which is always a partition
    poly = {k: v for k, v in poly.items() if v}
    out = {}
    while poly:
        top = max(poly)
        c = poly[top]
        out[partition(top)] = c
        for m, v in ssyt_weights(partition(top), n).items():
            poly[m] = poly.get(m, 0) - c * v
            if not poly[m]:
                del poly[m]
    return out


def box_partitions(rows, cols):
    for p in product(range(cols + 1), repeat=rows):
        if all(x >= y for x, y in zip(p, p[1:])):
            yield partition(p)


@pytest.mark.parametrize("rows,cols", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_lr_matches_schur_products(rows, cols):
    shapes = list(box_partitions(rows, cols))
    for lam in shapes:
        for mu in shapes:
            prod_poly = poly_mul(ssyt_weights(lam, rows), ssyt_weights(mu, rows))
            want = {nu: c for nu, c in schur_expand(prod_poly, rows).items() if not nu or nu[0] <= cols}
            assert gr.lr_coefficients(lam, mu, rows, cols) == want, (lam, mu)


box = st.tuples(st.integers(1, 3), st.integers(1, 4))


@st.composite
def classes(draw, k):
    r, w = draw(box)
    G = gr.Grassmannian(r, r + w)
    shapes = list(box_partitions(r + 1, w))
    return G, [gr.GrassClass(G, {draw(st.sampled_from(shapes)): 1}) for _ in range(k)]


@given(classes(2))
def test_lr_commutative(data):
    _, (a, b) = data
    assert a * b == b * a


@given(classes(3))
@settings(max_examples=60)
def test_lr_associative(data):
    _, (a, b, c) = data
    assert (a * b) * c == a * (b * c)


@given(classes(2))
def test_lr_coefficients_nonnegative(data):
    _, (a, b) = data
    assert all(v > 0 for v in (a * b).terms.values())


@given(classes(1))
def test_unit_and_cusp(data):
    G, (a,) = data
    assert gr.unit(G) * a == a
    assert gr.times_cusp(a) == gr.cusp(G) * a


def test_small_products():
    G = gr.Grassmannian(1, 3)
    s1 = gr.sigma((0, 1), G)
    assert s1 * s1 == gr.sigma((0, 2), G) + gr.sigma((1, 1), G)
    assert s1 * s1 * s1 * s1 == gr.sigma((2, 2), G).scale(2)
    assert gr.pairing(s1 * s1 * s1, s1) == 2
    assert gr.pairing(gr.sigma((2, 2), G), gr.unit(G)) == 1
    with pytest.raises(gr.DegreeMismatch):
        gr.pairing(s1, s1)
    with pytest.raises(gr.AmbientMismatch):
        s1 * gr.unit(gr.Grassmannian(1, 4))


def test_cusp_power_is_lr_power():
    for r, d in [(1, 4), (2, 5), (2, 6), (3, 6)]:
        G = gr.Grassmannian(r, d)
        acc = gr.unit(G)
        for g in range(G.dim // r + 1):
            assert gr.cusp_power(g, r, d) == acc
            acc = acc * gr.cusp(G)


def test_sigma_outside_box_is_zero():
    G = gr.Grassmannian(2, 4)
    assert gr.sigma((0, 1, 3), G).terms == {}


@pytest.mark.parametrize("r,d", [(1, 3), (1, 4), (2, 4), (2, 5), (2, 6), (3, 6), (3, 7)])
def test_closed_form_against_lr(r, d):
    G = gr.Grassmannian(r, d)
    for g in range(G.dim // r + 1):
        for alpha in enumerate_ramseqs(r, 0, d - r, G.dim - r * g):
            assert gr.schubert_number_closed(alpha, g, G) == gr.schubert_number_lr(alpha, g, G)


def test_closed_form_examples():
    assert gr.schubert_number_closed((0, 0), 4, gr.Grassmannian(1, 3)) == 2
    assert gr.schubert_number_closed((0, 0), 2, gr.Grassmannian(1, 2)) == 1
    G = gr.Grassmannian(2, 5)
    assert gr.schubert_number_closed((3, 3, 3), 0, G) == 1
    with pytest.raises(gr.DimensionCondition):
        gr.schubert_number_closed((0, 0, 0), 1, G)


def test_castelnuovo():
    assert gr.castelnuovo(4, 1, 3) == 2
    assert gr.castelnuovo(6, 1, 4) == 5
    assert gr.castelnuovo(10, 4, 12) == 42
    assert gr.castelnuovo(4, 1, 3) == gr.schubert_number_lr((0, 0), 4, gr.Grassmannian(1, 3))
    assert gr.castelnuovo(6, 1, 4) == gr.schubert_number_lr((0, 0), 6, gr.Grassmannian(1, 4))
    with pytest.raises(gr.NonzeroRho):
        gr.castelnuovo(5, 1, 3)


@given(st.integers(1, 5), st.integers(1, 4))
def test_bn_family_has_rho_zero(r, s):
    g, d = gr.bn_params(r, s)
    assert gr.rho(g, r, d) == 0


def test_total_ramification():
    assert gr.lin_one_total_ramification(4, 1, 3) == 24
    assert gr.lin_one_total_ramification(2, 1, 2) == 6
    assert gr.lin_one_total_ramification(10, 4, 12) == 10080


def test_limit_counts():
    # r=1, s=3: g=6, d=4, and j=3 is the only admissible split
    c = gr.limitlinj_counts(1, 3, 3)
    G = gr.Grassmannian(1, 4)
    for a, n in c.N:
        dual = tuple(3 - x for x in reversed(a))
        assert n == gr.schubert_number_lr(dual, 3, G)
    assert c.N and all(m == 0 for _, m in c.M)
    assert all(q >= 0 for _, q in c.Q)
    with pytest.raises(gr.ParameterRange):
        gr.limitlinj_counts(1, 2, 3)


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_elliptic_tail_sum(r, s):
    total, closed = gr.barC1_lin_pairing(r, s)
    assert total == closed


def test_elliptic_tail_small_case():
    total, closed = gr.barC1_lin_pairing(2, 1)
    assert closed == 6 * gr.castelnuovo(3, 2, 4)


@pytest.mark.parametrize("r,s", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 2)])
def test_sum_identity_with_rj(r, s):
    g = r * s + s
    for j in range(1, g):
        for t in range(1, r + 2):
            N, rhs, _ = gr.schubert_sum_identity(r, s, j, t)
            assert N == rhs, (j, t)


def test_sum_identity_example():
    N, rhs, desc = gr.schubert_sum_identity(1, 2, 2, 2)
    assert N == rhs == 2
    assert "r*j" in desc


@pytest.mark.parametrize("r,s", [(1, 2), (2, 1), (2, 2), (3, 1)])
def test_weighted_split_counts(r, s):
    g, d = gr.bn_params(r, s)
    N = gr.castelnuovo(g, r, d)
    assert gr.barCjt_lin_pairing(r, s, 1, 1) == 0
    for t in range(2, r + 2):
        assert gr.barCjt_lin_pairing(r, s, 1, t) == N
        if t >= 3:
            assert gr.barCjt_lin_pairing(r, s, 0, t) == 0
    for j in range(2, g):
        for t in range(1, r + 2):
            assert gr.barCjt_lin_pairing(r, s, j, t) >= Fraction(N * (t - 1) * j, t)
