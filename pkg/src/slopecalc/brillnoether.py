"""Intersection numbers on C x W^r_d(C) for a general curve C of genus rs+s-1.

Classes live in H*(C x Pic^d(C)) with eta (point of C), gamma and theta,
subject to eta^2 = 0, gamma*eta = 0 and gamma^2 = -2 eta theta, together with
c_i = c_i(E^dual) of the tautological rank r+1 bundle on W = W^r_d(C).

Normalization used everywhere: a class Q of degree r on W (= dim W) is
integrated with the Harris-Tu determinant, which pushes Q forward to Pic as a
multiple of theta^{g_C} where g_C = rs+s-1, and theta^{g_C} integrates to
g_C!. The eta factor eats the curve direction, so int_{C x W} eta Q = int_W Q,
and anything with a bare gamma integrates to 0.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import elementary_to_monomials
from .grassmann import DegreeMismatch, ParameterRange, castelnuovo
from .numeric import binom, determinant, fact, inv_factorial_or_zero


@dataclass(frozen=True)
class BNSetup:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ParameterRange(f"need r, s >= 1, got r={self.r}, s={self.s}")

    @property
    def g(self) -> int:
        # genus of the curves in the moduli space; C itself has genus g - 1
        return self.r * self.s + self.s

    @property
    def g_curve(self) -> int:
        return self.g - 1

    @property
    def d(self) -> int:
        return self.r * self.s + self.r

    @property
    def dim_w(self) -> int:
        g, r, d = self.g_curve, self.r, self.d
        return g - (r + 1) * (g - d + r)


Key = tuple  # (eta, gamma, theta, chern multiset as a sorted tuple)


class CPic:
    """Polynomial in eta, gamma, theta, c_1..c_{r+1} kept in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict[Key, Fraction] = {}
        for (e, c, t, m), v in (terms or {}).items():
            _accumulate(out, e, c, t, m, Fraction(v))
        self.terms = {k: v for k, v in out.items() if v}

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return CPic(out)

    __radd__ = __add__

    def __neg__(self):
        return CPic({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CPic({k: other * v for k, v in self.terms.items()})
        out: dict[Key, Fraction] = {}
        for (e1, c1, t1, m1), v1 in self.terms.items():
            for (e2, c2, t2, m2), v2 in other.terms.items():
                _accumulate(out, e1 + e2, c1 + c2, t1 + t2, m1 + m2, v1 * v2)
        return CPic({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, CPic) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (e, c, t, m), v in sorted(self.terms.items()):
            mono = "*".join(filter(None, ["eta" * e, "gamma" * c, f"theta^{t}" if t else "",
                                          *(f"c{i}" for i in m)]))
            parts.append(f"{v}*{mono or '1'}")
        return " + ".join(parts)

    def degree_parts(self) -> set[int]:
        return {e + c + t + sum(m) for (e, c, t, m) in self.terms}

    def coefficient(self, e=0, c=0, t=0, m=()) -> Fraction:
        return self.terms.get((e, c, t, tuple(sorted(m))), Fraction(0))


def _accumulate(out, e, c, t, m, v):
    # gamma^2 -> -2 eta theta, then kill eta^2 and eta*gamma
    if c >= 2:
        if c >= 3:
            return
        e, c, t, v = e + 1, 0, t + 1, -2 * v
    if e >= 2 or (e and c):
        return
    m = tuple(sorted(x for x in m if x))
    key = (e, c, t, m)
    out[key] = out.get(key, 0) + v


def _lift(x):
    return x if isinstance(x, CPic) else CPic({(0, 0, 0, ()): x})


ONE = CPic({(0, 0, 0, ()): 1})
ETA = CPic({(1, 0, 0, ()): 1})
GAMMA = CPic({(0, 1, 0, ()): 1})
THETA = CPic({(0, 0, 1, ()): 1})


def chern(i: int, setup: BNSetup) -> CPic:
    """c_i of the dual tautological bundle (rank r+1)."""
    if i == 0:
        return ONE
    if i < 0 or i > setup.r + 1:
        return CPic()
    return CPic({(0, 0, 0, (i,)): 1})


def harris_tu_monomial(exponents, setup: BNSetup) -> tuple[int, Fraction]:
    """x^I on W as (theta degree, coefficient) of its push-forward to Pic."""
    exps = tuple(exponents)
    if len(exps) != setup.r + 1:
        raise ParameterRange(f"need {setup.r + 1} exponents, got {exps}")
    return _ht(exps, setup.r, setup.s)


@lru_cache(maxsize=None)
def _ht(exps, r, s):
    # g-1 + r - d = s - 1 on this family
    shift = s - 1
    n = r + 1
    mat = [[inv_factorial_or_zero(shift + exps[j] - j + l) for l in range(n)] for j in range(n)]
    return n * shift + sum(exps), determinant(mat)


def chern_number(poly: CPic, setup: BNSetup) -> Fraction:
    """Integrate a theta/c polynomial of degree dim W = r over W.

    Equivalently the push-forward to Pic has degree g_C = rs+s-1 and is paired
    against theta^{g_C} = g_C!.
    """
    total = Fraction(0)
    for (e, c, t, m), v in poly.terms.items():
        if e or c:
            raise ValueError("chern_number takes theta and c_i only")
        if t + sum(m) != setup.dim_w:
            raise DegreeMismatch(f"term of degree {t + sum(m)}, W has dimension {setup.dim_w}")
        total += v * _chern_monomial(m, t, setup.r, setup.s)
    return total


@lru_cache(maxsize=None)
def _chern_monomial(m, t, r, s):
    if any(i > r + 1 for i in m):
        return Fraction(0)
    top = r * s + s - 1
    acc = Fraction(0)
    for exps, k in elementary_to_monomials(m, r + 1).items():
        deg, coef = _ht(exps, r, s)
        if deg + t == top:
            acc += k * coef
    return acc * fact(top)


def integrate(x: CPic, setup: BNSetup) -> Fraction:
    """Integral over C x W of a class of degree r + 1."""
    top = setup.dim_w + 1
    total = Fraction(0)
    for (e, c, t, m), v in x.terms.items():
        if e + c + t + sum(m) != top:
            raise DegreeMismatch(f"term of degree {e + c + t + sum(m)} on C x W of dim {top}")
        if e == 1:
            total += v * chern_number(CPic({(0, 0, t, m): 1}), setup)
        # gamma alone, or a class pulled back from W, integrates to 0
    return total


def top_chern_constant(setup: BNSetup) -> Fraction:
    """1! 2! ... (r-1)! (r+1)! / ((s-1)! (s+1)! ... (s+r)!)"""
    r, s = setup.r, setup.s
    num = fact(r + 1)
    for k in range(1, r):
        num *= fact(k)
    den = fact(s - 1)
    for k in range(1, r + 1):
        den *= fact(s + k)
    return Fraction(num, den)


def verify_vandermonde(setup: BNSetup) -> list[tuple[str, Fraction, Fraction, str]]:
    """The five identities relating c_{r-1}, c_{r-2}, c_1, theta and c_r on W."""
    r, s = setup.r, setup.s
    if r < 2:
        raise ParameterRange("the identities with c_{r-2} need r >= 2")
    c = lambda i: chern(i, setup)
    cr = chern_number(c(r), setup)
    checks = [
        ("c_{r-1} theta", c(r - 1) * THETA, Fraction(r * (s + 1), 2) * cr),
        ("c_{r-2} theta^2", c(r - 2) * THETA ** 2, Fraction(r * (r - 1) * (s + 1) * (s + 2), 6) * cr),
        ("c_{r-2} c_1 theta", c(r - 2) * c(1) * THETA,
         Fraction(r * (s + 1), 2) * (1 + Fraction((r - 2) * (r + 2) * (s + 2), 3 * (s + r + 1))) * cr),
        ("c_{r-1} c_1", c(r - 1) * c(1),
         (1 + Fraction((r - 1) * (r + 2) * (s + 1), 2 * (s + r + 1))) * cr),
        ("c_r", c(r), top_chern_constant(setup) * fact(setup.g_curve)),
    ]
    out = []
    for name, lhs, rhs in checks:
        left = chern_number(lhs, setup)
        if left == rhs == 0:
            status = "inconclusive"
        else:
            status = "equal" if left == rhs else "differ"
        out.append((name, left, rhs, status))
    return out


def class_X(setup: BNSetup) -> CPic:
    r, g, d = setup.r, setup.g, setup.d
    if r < 2:
        raise ParameterRange("class_X needs r >= 2")
    c = lambda i: chern(i, setup)
    return c(r) + c(r - 1) * (2 * GAMMA + (2 * d + 2 * g - 4) * ETA) - 6 * c(r - 2) * ETA * THETA


def class_Y(setup: BNSetup) -> CPic:
    r, d = setup.r, setup.d
    if r < 2:
        raise ParameterRange("class_Y needs r >= 2")
    c = lambda i: chern(i, setup)
    return c(r) + c(r - 1) * (GAMMA + (d - 1) * ETA) - 2 * c(r - 2) * ETA * THETA


def jet_quotient(setup: BNSetup, which: str) -> CPic:
    """Total Chern class of E^dual minus the rank-2 bundle whose degeneracy locus is X or Y."""
    g, d = setup.g, setup.d
    if which == "X":
        inv = ONE + 2 * GAMMA + (2 * d + 2 * g - 4) * ETA - 6 * ETA * THETA
    elif which == "Y":
        inv = ONE + GAMMA + (d - 1) * ETA - 2 * ETA * THETA
    else:
        raise ValueError(which)
    total = sum((chern(i, setup) for i in range(setup.r + 2)), CPic())
    return total * inv


def graded(x: CPic, k: int) -> CPic:
    return CPic({key: v for key, v in x.terms.items() if key[0] + key[1] + key[2] + sum(key[3]) == k})


def g0b_restriction(b: int, which: str, setup: BNSetup) -> CPic:
    """c_1 of G_{0,b} restricted to the curve X or Y."""
    g, d = setup.g, setup.d
    if b < 1:
        raise ParameterRange("b >= 1")
    if b == 1:
        return -chern(1, setup)
    if which == "X":
        return -b * b * THETA - (2 * g - 4) * ETA - b * (d * ETA + GAMMA)
    if which == "Y":
        return -b * b * THETA + ETA
    raise ValueError(which)


def koszul_setup(s: int, i: int) -> BNSetup:
    if s < 1 or i < 0:
        raise ParameterRange(f"need s >= 1, i >= 0, got s={s}, i={i}")
    return BNSetup(2 * s + s * i + i, s)


def h_i2_coefficient(s: int, i: int) -> tuple[int, int]:
    """c_1(H_{i,2}) / c_1(G_{0,1}): (alternating sum over Sym pieces, closed binomial)."""
    r = 2 * s + s * i + i
    expanded = 0
    for l in range(i + 1):
        k = i - l
        sym_rank, sym_c1 = binom(r + l + 2, l + 2), binom(r + l + 2, r + 1)
        expanded += (-1) ** l * (sym_rank * binom(r, k - 1) + binom(r + 1, k) * sym_c1)
    return expanded, binom(2 * s + i * s + i, i) * (s + 1) * (i + 2)


def c1_g_minus_h(s: int, i: int, which: str) -> CPic:
    setup = koszul_setup(s, i)
    r, g, d = setup.r, setup.g, setup.d
    g01 = g0b_restriction(1, which, setup)
    cg = CPic()
    for l in range(i + 1):
        sign = (-1) ** l
        cg = cg + sign * binom(r + 1, i - l) * g0b_restriction(l + 2, which, setup)
        cg = cg + sign * ((l + 2) * d + 1 - g) * binom(r, i - l - 1) * g01
    return cg - h_i2_coefficient(s, i)[1] * g01


def koszul_ABB(s: int, i: int) -> tuple[Fraction, Fraction, Fraction]:
    """(A, B_0, B_1) of the virtual Koszul class from the two test curves and the pencil."""
    setup = koszul_setup(s, i)
    g = setup.g
    on_x = integrate(class_X(setup) * c1_g_minus_h(s, i, "X"), setup)
    on_y = integrate(class_Y(setup) * c1_g_minus_h(s, i, "Y"), setup)
    # C^1 . D = (2g-4) B_1, C^0 . D = (2g-2) B_0 - B_1, R . D = A - 12 B_0 + B_1 = 0
    b1 = on_x / (2 * g - 4)
    b0 = (on_y + b1) / (2 * g - 2)
    return 12 * b0 - b1, b0, b1


def _gp_setup(r: int, s: int) -> BNSetup:
    if r < 2 or s < 2:
        raise ParameterRange(f"need r >= 2, s >= 2, got r={r}, s={s}")
    return BNSetup(r, s)


def gp_b1(r: int, s: int) -> Fraction:
    """delta_1 coefficient of the Gieseker-Petri class, from the C^1 chain."""
    setup = _gp_setup(r, s)
    g, d = setup.g, setup.d
    N = chern_number(chern(r, setup), setup)
    cr1_theta = chern_number(chern(r - 1, setup) * THETA, setup)
    ker = (2 * d + 2 * g - 4) * N - 6 * cr1_theta
    along_x = integrate(class_X(setup) * (-(r + 1 - s) * chern(1, setup) + (r + 1) * THETA), setup)
    chain = -(2 * g - 4) * N + along_x + (r + 1) * ker
    return chain / (2 * g - 4)


def gp_b1_closed(r: int, s: int) -> Fraction:
    setup = _gp_setup(r, s)
    N = castelnuovo(setup.g, r, setup.d)
    return N * Fraction(r * (s - 1) * (3 * r * s * s + 2 * s * s + r * r * s * s + 7 * s + 6 * r * s
                                       + r * r * s + 2 * r + 2), (s + r + 1) * (r * s + s - 2))


def gp_b0(r: int, s: int, literal: bool = False) -> Fraction:
    """delta_0 coefficient, from the C^0 chain and the already known b_1.

    The chain pairs [Y] with -c_1(G_{0,1} (x) N) = s c_1 + (r+1)(theta - c_1) plus
    the kernel term. ``literal=True`` reads the printed factor as (r+1) theta
    alone, which drops the s c_1 - (r+1) c_1 part.
    """
    setup = _gp_setup(r, s)
    g, d = setup.g, setup.d
    N = chern_number(chern(r, setup), setup)
    cr1_theta = chern_number(chern(r - 1, setup) * THETA, setup)
    ker = (d - 1) * N - 2 * cr1_theta
    mid = (r + 1) * THETA if literal else (r + 1) * THETA - (r + 1 - s) * chern(1, setup)
    chain = N + integrate(class_Y(setup) * mid, setup) + (r + 1) * ker
    return (chain + gp_b1(r, s)) / (2 * g - 2)


def gp_b0_closed(r: int, s: int) -> Fraction:
    setup = _gp_setup(r, s)
    N = castelnuovo(setup.g, r, setup.d)
    return N * Fraction(r * (r + 1) * (r + 2) * (s - 1) * s * (s + 1) * (r * s + s + 4),
                        6 * (r + s + 1) * (r * s + s - 2) * (r * s + s - 1))


def castelnuovo_check(setup: BNSetup) -> tuple[Fraction, int]:
    """(integral of c_r over W, number of g^r_d in genus rs+s)."""
    return chern_number(chern(setup.r, setup), setup), castelnuovo(setup.g, setup.r, setup.d)
