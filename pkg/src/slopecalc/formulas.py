"""Closed-form divisor classes and slopes, evaluated by direct substitution.

Each printed polynomial is typed in as printed and evaluated at integer
points; nothing is simplified first. Where the printed coefficients disagree
with an independent computation, both are available and the checks module
reports which one the independent route supports.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .grassmann import ParameterRange, barCjt_lin_pairing, castelnuovo
from .moduli import (EXACT, LOWER_BOUND, UNKNOWN, Coef, DegenerateDenominator, MgClass,
                     MgnClass, UnknownCoefficient, khosla_range)


class ZeroDenominator(ZeroDivisionError):
    pass


class NonIntegral(ValueError):
    pass


class NonIntegralD(ValueError):
    pass


class NonIntegralN(ValueError):
    pass


def _frac(num, den, what="denominator") -> Fraction:
    if den == 0:
        raise DegenerateDenominator(f"{what} vanishes")
    return Fraction(num, den)


@dataclass(frozen=True)
class KoszulSetup:
    s: int
    i: int

    def __post_init__(self):
        if self.s < 1 or self.i < 0:
            raise ParameterRange(f"need s >= 1, i >= 0, got s={self.s}, i={self.i}")

    @property
    def r(self) -> int:
        return 2 * self.s + self.s * self.i + self.i

    @property
    def g(self) -> int:
        return self.r * self.s + self.s

    @property
    def d(self) -> int:
        return self.r * self.s + self.r


def koszul_f(s: int, i: int) -> int:
    return ((i**4 + 8 * i**3 + 24 * i**2 + 32 * i + 16) * s**7
            + (i**4 + 4 * i**3 - 16 * i - 16) * s**6
            - (i**4 + 7 * i**3 + 13 * i**2 - 12) * s**5
            - (i**4 + 2 * i**3 + i**2 + 14 * i + 24) * s**4
            + (2 * i**3 + 2 * i**2 - 6 * i - 4) * s**3
            + (i**3 + 17 * i**2 + 50 * i + 41) * s**2
            + (7 * i**2 + 18 * i + 9) * s + 2 * i + 2)


def koszul_h(s: int, i: int) -> int:
    return ((i**3 + 6 * i**2 + 12 * i + 8) * s**6
            + (i**3 + 2 * i**2 - 4 * i - 8) * s**5
            - (i**3 + 7 * i**2 + 11 * i + 2) * s**4
            - (i**3 - 5 * i) * s**3
            + (4 * i**2 + 5 * i + 1) * s**2
            + (i**2 + 7 * i + 11) * s + 4 * i + 2)


def koszul_slope(s: int, i: int) -> Fraction:
    KoszulSetup(s, i)
    den = (i + 2) * s * koszul_h(s, i)
    if den == 0:
        raise ZeroDenominator(f"h({s}, {i}) = 0")
    return Fraction(6 * koszul_f(s, i), den)


def koszul_bound_check(s: int, i: int) -> bool:
    if s < 2:
        raise ParameterRange(f"the bound is claimed for s >= 2, got s={s}")
    g = KoszulSetup(s, i).g
    return 6 < koszul_slope(s, i) < 6 + Fraction(12, g + 1)


def harris_mumford_slope(i: int) -> Fraction:
    """Slope of the gonality divisor on M_{2i+3}: 6(i+3)/(i+2)."""
    return Fraction(6 * (i + 3), i + 2)


def hurwitz_koszul_slope(i: int) -> Fraction:
    """The s = 2 specialization, as a display of its own."""
    return Fraction(3 * (4 * i + 7) * (6 * i * i + 19 * i + 12), (12 * i * i + 31 * i + 18) * (i + 2))


def koszul_class(s: int, i: int) -> MgClass:
    """A lambda - B_0 delta_0 - B_1 delta_1, from the test curve computation."""
    from .brillnoether import koszul_ABB
    setup = KoszulSetup(s, i)
    A, B0, B1 = koszul_ABB(s, i)
    return MgClass(setup.g, A, (-B0, -B1) + (None,) * (setup.g // 2 - 1))


def rank_identity_check(s: int, i: int) -> dict:
    """rank A = (i+1) C(r+2, i+2) against rank B = C(r, i)(2d + 1 - g - id/r)."""
    k = KoszulSetup(s, i)
    r, g, d = k.r, k.g, k.d
    if (i * d) % r:
        raise NonIntegral(f"id/r = {i * d}/{r} is not an integer")
    rank_a = (i + 1) * comb(r + 2, i + 2)
    rank_b = comb(r, i) * (2 * d + 1 - g - i * d // r)
    return {"r": r, "g": g, "d": d, "rank_A": rank_a, "rank_B": rank_b, "equal": rank_a == rank_b}


# --- Khosla: i = 0, r = 2s ---

def khosla_slope(s: int) -> Fraction:
    if s < 1:
        raise ParameterRange(f"s >= 1, got {s}")
    num = 3 * (16 * s**7 - 16 * s**6 + 12 * s**5 - 24 * s**4 - 4 * s**3 + 41 * s**2 + 9 * s + 2)
    return Fraction(num, s * (8 * s**6 - 8 * s**5 - 2 * s**4 + s**2 + 11 * s + 2))


def khosla_b0_over_cr(s: int) -> Fraction:
    return _frac(s * (8 * s**6 - 8 * s**5 - 2 * s**4 + s**2 + 11 * s + 2),
                 3 * (2 * s * s + s - 2) * (3 * s + 1) * (2 * s - 1))


def khosla_bj_closed(s: int, j: int) -> Fraction:
    num = (4 * (s - 1) * j * (2 * j * s**3 + j * s**2 - 2 * j * s - 2 * j + 4 * s**3 + 4 * s**2 - 3 * s)
           * (2 * s * s + s - j))
    return _frac(num, (2 * s * s + s - 2) * (3 * s + 1) * (2 * s - 1) * (j - 1))


@dataclass(frozen=True)
class KhoslaResult:
    s: int
    slope: Fraction
    b0_over_cr: Fraction
    bj_over_cr: dict  # j -> Coef; UNKNOWN outside the proven range


def khosla_class(s: int) -> KhoslaResult:
    if s < 2:
        raise ParameterRange(f"s >= 2, got {s}")
    g = s * (2 * s + 1)
    known = set(khosla_range(s))
    bj = {j: Coef(khosla_bj_closed(s, j)) if j in known else Coef(None, UNKNOWN)
          for j in range(1, g)}
    return KhoslaResult(s, khosla_slope(s), khosla_b0_over_cr(s), bj)


# --- Gieseker-Petri ---

@dataclass(frozen=True)
class GPResult:
    r: int
    s: int
    prefactor: Fraction
    a: Fraction
    b0: Fraction
    b1: Fraction
    cls: MgClass  # prefactor applied; delta_j for j >= 2 unknown (only b_j >= b_1 is claimed)

    @property
    def slope(self) -> Fraction:
        return self.a / self.b0


def gp_class(r: int, s: int) -> GPResult:
    g, d = r * s + s, r * s + r
    if g < 3:
        raise ParameterRange(f"need rs+s >= 3, got {g}")
    cr = castelnuovo(g, r, d)
    pre = _frac(cr * (s - 1) * r, (r + s + 1) * (r * s + s - 2) * (r * s + s - 1))
    a = (r * r * s * s * (4 * s + r + r * s + 10) + s * s * (5 * r * s + 24 * r + 2 * s + 15)
         + 21 * s + 26 * r * s + 7 * r * r * s + 2 * r + 2)
    b0 = Fraction(s * (s + 1) * (r + 1) * (r + 2) * (r * s + s + 4), 6)
    b1 = (r * s + s - 1) * (3 * r * s * s + 2 * s * s + r * r * s * s + 7 * s + 6 * r * s + r * r * s + 2 * r + 2)
    delta = (-pre * b0, -pre * b1) + (None,) * (g // 2 - 1)
    return GPResult(r, s, pre, Fraction(a), b0, Fraction(b1), MgClass(g, pre * a, delta))


def gp_slope_display(r: int, s: int) -> Fraction:
    g = r * s + s
    return (6 + Fraction(12, g + 1)
            + _frac(6 * (s + r + 1) * (r * s + s - 2) * (r * s + s - 1),
                    s * (s + 1) * (r + 1) * (r + 2) * (r * s + s + 4) * (r * s + s + 1)))


def eh_petri(r: int) -> tuple[Fraction, Fraction, Fraction]:
    """(lambda, b_0, b_1) per c_r at s = 2, from the Eisenbud-Harris display."""
    return Fraction(6 * r * r + 25 * r + 20, 2 * r + 1), Fraction((r + 1) * (r + 2), 2 * r + 1), Fraction(3 * r + 4)


# --- pointed Brill-Noether divisor Lin on M_{g, r+1} ---

def lin_prefactor(r: int, s: int) -> Fraction:
    g, d = r * s + s, r * s + r
    return _frac(r * castelnuovo(g, r, d), r * s + s - 1)


def _lin_den(r, s):
    den = 2 * (s + r + 1) * (r * s + s - 2)
    if den == 0:
        raise DegenerateDenominator(f"rs+s-2 = 0 at r={r}, s={s}")
    return den


def lin_a(r, s) -> Fraction:
    num = (r + 2) * (r * r * s**3 - r * r * s + 2 * r * s**3 + 6 * r * s * s - 2 * r * s - 8 * r
                     + s**3 + 6 * s * s + 3 * s - 8)
    return Fraction(num, _lin_den(r, s))


def lin_c(r, s) -> Fraction:
    return Fraction(s + 1, 2)


def lin_b_irr(r, s) -> Fraction:
    return Fraction((s - 1) * (s + 1) * (r + 1) * (r + 2) * (r * s + s + 4), 6 * _lin_den(r, s))


def lin_b_j0(r, s, j) -> Fraction:
    if j < 1:
        raise ParameterRange("b_{j:0} is printed for j >= 1")
    num = j * (r + 2) * (r * s * (s * s - 1) * (r + 2) + s * (s * s - 2 * j - 3)
                         + (r + 1) * (3 * s * s - j * s * s + 2 * j - 2))
    return Fraction(num, _lin_den(r, s))


def lin_b_0t(r, s, t) -> Fraction:
    if not 2 <= t <= r + 1:
        raise ParameterRange(f"b_(0:t) is printed for 2 <= t <= r+1, got t={t}")
    return Fraction(t * (t * r * s + t * s - t + r - s + 1), 2 * r)


def _lin_k(r, s) -> Fraction:
    return Fraction((s - 1) * (s + 1) * (r + 1) * (r**3 * s + 3 * r * r * s - 2 * s + 4), r * _lin_den(r, s))


def lin_b_1t(r, s, t, variant: str = "printed") -> Fraction:
    """b_{1:t}.

    printed: C(t-1, 2)(rs+s-1)/r + K, the closed form as published.
    logan: the same with C(t, 2), as in Logan's s = 1 display.
    corrected: C(t, 2)(rs+s-1)/r + t(r+2)(s-1)/(2r) + K, which is what the
    recursion at j = 1 forces.
    """
    if t < 1:
        raise ParameterRange(f"t >= 1, got {t}")
    k = _lin_k(r, s)
    if variant == "printed":
        return comb(t - 1, 2) * Fraction(r * s + s - 1, r) + k
    if variant == "logan":
        return comb(t, 2) * Fraction(r * s + s - 1, r) + k
    if variant == "corrected":
        return comb(t, 2) * Fraction(r * s + s - 1, r) + Fraction(t * (r + 2) * (s - 1), 2 * r) + k
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class LinResult:
    r: int
    s: int
    prefactor: Fraction
    cls: MgnClass  # coefficients inside the bracket, prefactor not applied
    alias_conflicts: tuple  # (stratum, value kept, value dropped)

    def scaled(self) -> MgnClass:
        return self.cls.scale(self.prefactor)


def lin_class(r: int, s: int, b1: str = "printed") -> LinResult:
    """The bracket a lambda + c psi - b_irr delta_irr - sum b_{j:t} delta_{j:S}.

    b_{j:t} for j >= 2, t >= 1 is only bounded below by b_{0:t}. When two
    printed formulas name the same stratum (delta_{g-1:0} = delta_{1:r+1})
    the b_{j:0} value is kept and the clash is recorded.
    """
    g, n = r * s + s, r + 1
    if g < 3:
        raise ParameterRange(f"need rs+s >= 3, got {g}")
    pre = lin_prefactor(r, s)
    probe = MgnClass(g, n, Coef(0), Coef(0), Coef(0))
    boundary: dict = {}
    conflicts = []

    def put(j, t, coef):
        key = probe.key(j, t)
        if key in boundary:
            old = boundary[key]
            if old.status == EXACT and coef.status == EXACT and old != coef:
                conflicts.append(((j, t), old.value, coef.value))
            return
        boundary[key] = coef

    for j in range(1, g):
        put(j, 0, Coef(-lin_b_j0(r, s, j)))
    for t in range(2, n + 1):
        put(0, t, Coef(-lin_b_0t(r, s, t)))
    for t in range(1, n + 1):
        put(1, t, Coef(-lin_b_1t(r, s, t, b1)))
    for j in range(2, g):
        for t in range(1, n + 1):
            bound = lin_b_0t(r, s, t) if t >= 2 else Fraction(0)
            put(j, t, Coef(bound, LOWER_BOUND) if t >= 2 else Coef(None, UNKNOWN))
    cls = MgnClass(g, n, Coef(lin_a(r, s)), Coef(lin_c(r, s)), Coef(-lin_b_irr(r, s)), boundary)
    return LinResult(r, s, pre, cls, tuple(conflicts))


def lin_recursion_check(r: int, s: int, j: int, t: int, b1: str = "printed") -> dict:
    """C-bar_{j,t} . Lin: Schubert count against the printed coefficients.

    rhs = prefactor * ((2j+2t-3)c - (t-1) b_{0:2} + b_{j:t} - b_{j:t-1})
    """
    g = r * s + s
    if j >= 2:
        raise UnknownCoefficient(f"b_(j:t) for j={j} >= 2 is only bounded below")
    if j == 0 and not 3 <= t <= r + 1:
        raise ParameterRange(f"at j=0 the recursion is used for 3 <= t <= r+1, got t={t}")
    if j == 1 and not 1 <= t <= r + 1:
        raise ParameterRange(f"at j=1 need 1 <= t <= r+1, got t={t}")
    if g < 3:
        raise ParameterRange(f"need rs+s >= 3, got {g}")

    def b(jj, tt):
        if jj == 0:
            return lin_b_0t(r, s, tt)
        return lin_b_j0(r, s, 1) if tt == 0 else lin_b_1t(r, s, tt, b1)

    b02 = lin_b_0t(r, s, 2)
    bracket = (2 * j + 2 * t - 3) * lin_c(r, s) - (t - 1) * b02 + b(j, t) - b(j, t - 1)
    lhs = barCjt_lin_pairing(r, s, j, t)
    rhs = lin_prefactor(r, s) * bracket
    return {"r": r, "s": s, "j": j, "t": t, "b1": b1, "lhs": Fraction(lhs), "rhs": rhs, "ok": lhs == rhs}


def pointed2_comparison(r: int) -> dict:
    """Lin at s = 2 against its own specialized display, both per c_r.

    The display reads 1/(2(2r+1)) ((3r+5)(r+2) lambda + 3r psi - C(r+2,2) delta_irr - delta_{0:2}).
    """
    s = 2
    k = Fraction(r, 2 * r + 1)  # prefactor / c_r at s = 2
    ours = {"lambda": k * lin_a(r, s), "psi": k * lin_c(r, s), "delta_irr": -k * lin_b_irr(r, s),
            "delta_0:2": -k * lin_b_0t(r, s, 2)}
    den = 2 * (2 * r + 1)
    shown = {"lambda": Fraction((3 * r + 5) * (r + 2), den), "psi": Fraction(3 * r, den),
             "delta_irr": Fraction(-comb(r + 2, 2), den), "delta_0:2": Fraction(-1, den)}
    return {key: (ours[key], shown[key], ours[key] == shown[key]) for key in ours}


# --- other pointed divisors ---

def _boundary_exact_then_bounds(g, n, exact: dict, bound_for_j_ge1=None) -> dict:
    probe = MgnClass(g, n, Coef(0), Coef(0), Coef(0))
    out = {}
    for (j, t), v in exact.items():
        out.setdefault(probe.key(j, t), Coef(v))
    if bound_for_j_ge1 is not None:
        for j in range(1, g + 1):
            for t in range(0, n + 1):
                try:
                    key = probe.key(j, t)
                except ValueError:
                    continue
                if key not in out:
                    bound = bound_for_j_ge1(t)
                    out[key] = Coef(bound, LOWER_BOUND) if bound is not None else Coef(None, UNKNOWN)
    return out


def mrc_n(g: int, r: int, i: int) -> int:
    return (2 * r + 1) * (g - 1) - 2 * i


def mrc_class(g: int, r: int, i: int) -> MgnClass:
    """Class of Mrc^r_{g,i} on M_{g,n}, prefactor C(g-1, i)/(g-1) applied."""
    n = mrc_n(g, r, i)
    if g < 3 or not 0 <= i <= g or n < 1 or r < 1:
        raise ParameterRange(f"need g >= 3, 0 <= i <= g, r >= 1, n >= 1; got g={g}, r={r}, i={i}")
    pre = Fraction(comb(g - 1, i), g - 1)
    c = r * g + g - i - r - 1
    b_irr = -Fraction(comb(r + 1, 2) * (g - 1) * (g - 2) + i * (i + 1 + 2 * r - r * g - g), g - 2)
    a = -Fraction((g - 1) * (g - 2) * (6 * r * r + 6 * r + 1) + i * (24 * r + 10 * i + 10 - 10 * g - 12 * r * g), g - 2)

    def b0(t):
        return comb(t + 1, 2) * (g - 1) + t * (r * g - r) - t * i
    exact = {(0, t): -pre * b0(t) for t in range(2, n + 1)}
    boundary = _boundary_exact_then_bounds(g, n, exact, lambda t: pre * b0(t) if t >= 2 else None)
    return MgnClass(g, n, Coef(pre * a), Coef(pre * c), Coef(-pre * b_irr), boundary)


def nfold_d(g: int, n: int) -> int:
    if (g + n) % 2:
        raise NonIntegralD(f"d = (g+n)/2 with g={g}, n={n} is not an integer")
    return (g + n) // 2


def nfold_class(g: int, n: int) -> MgnClass:
    """lambda, psi, delta_irr and delta_{0:t} of the n-fold point divisor (r = 1)."""
    d = nfold_d(g, n)
    if g < 3 or n < 1:
        raise ParameterRange(f"need g >= 3, n >= 1; got g={g}, n={n}")
    if g == d:
        raise DegenerateDenominator("g - d = 0")
    lam = Fraction(10 * n, g - 2) * comb(g - 2, d - 1) - Fraction(n, g) * comb(g, d)
    psi = Fraction(n - 1, g - 1) * comb(g - 1, d - 1)
    d_irr = -Fraction(n, g - 2) * comb(g - 2, d - 1)
    exact = {(0, t): -Fraction(t * (n * n - g + t * g * n - t * n), 2 * (g - 1) * (g - d)) * comb(g - 1, d)
             for t in range(2, n + 1)}
    boundary = _boundary_exact_then_bounds(g, n, exact, lambda t: None)
    return MgnClass(g, n, Coef(lam), Coef(psi), Coef(d_irr), boundary)


def nfold_mu_nu(g: int, n: int) -> dict:
    """mu BN + nu W on M_{g,1} next to the printed lambda, psi, delta_irr."""
    d = nfold_d(g, n)
    mu = Fraction(6 * n, (g + 1) * (g - 2)) * comb(g - 2, d - 1)
    nu = Fraction(n * (n - 1) * (n + 1), g * (g - 1) * (g + 1)) * comb(g, d)
    printed = nfold_class(g, n)
    route = {"lambda": (g + 3) * mu - nu, "psi": comb(g + 1, 2) * nu, "delta_irr": -Fraction(g + 1, 6) * mu}
    shown = {"lambda": printed.lam.value, "psi": printed.psi.value, "delta_irr": printed.d_irr.value}
    return {"mu": mu, "nu": nu,
            **{k: (route[k], shown[k], route[k] == shown[k]) for k in route}}


def _integral_n(num_base: int, disc: int, what: str) -> int:
    root = isqrt(disc)
    if root * root != disc or (num_base + root) % 2:
        raise NonIntegralN(f"{what}: sqrt({disc}) does not give an integer n")
    return (num_base + root) // 2


def syz_class(g: int, i: int) -> tuple[int, MgnClass]:
    n = _integral_n(2 * g + i + 1, (i + 1) ** 2 + 4 * i * g + 8 * g, f"syzygy divisor g={g}, i={i}")
    if n - g - i == 0:
        raise DegenerateDenominator("n - g - i = 0")
    pre = Fraction(comb(n - g - 1, i), n - g - i)
    return n, MgnClass(g, n, Coef(-pre * (n + g - 1)), Coef(pre * (3 * g - n + i + 1)), Coef(Fraction(0)))


def wahl_class(g: int) -> tuple[int, MgnClass]:
    n = _integral_n(2 * g + 3, 24 * g + 1, f"Wahl divisor g={g}")
    k = Fraction(n - g - 1)
    return n, MgnClass(g, n, Coef(-k), Coef(k), Coef(Fraction(-1)))
