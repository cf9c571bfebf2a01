"""Divisor classes on M_g-bar and M_{g,n}-bar, paired against test curves.

Coefficients are stored exactly as they appear in front of each generator,
signs included, so 17 lambda - 2 delta_0 has delta = [-2, ...]. The usual
positive b_j are read back through ``b``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .grassmann import ParameterRange, barC1_lin_pairing, castelnuovo, lin_one_total_ramification


class SpaceMismatch(ValueError):
    pass


class UnknownCurve(ValueError):
    pass


class NonpositiveLambda(ValueError):
    pass


class ZeroB0(ZeroDivisionError):
    pass


class UnknownCoefficient(LookupError):
    pass


class DegenerateDenominator(ZeroDivisionError):
    pass


EXACT, LOWER_BOUND, UNKNOWN = "exact", "lower_bound", "unknown"


@dataclass(frozen=True)
class Coef:
    """A coefficient together with how much the source actually pins down.

    For LOWER_BOUND the number is a bound on the positive b-value
    (b >= bound); for UNKNOWN it is None.
    """
    value: Fraction | None
    status: str = EXACT

    def exact(self) -> Fraction:
        if self.status != EXACT:
            raise UnknownCoefficient(f"coefficient is {self.status}")
        return self.value


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class MgClass:
    g: int
    lam: Fraction
    delta: tuple  # signed coefficients of delta_0 .. delta_{[g/2]}, None if not known

    def __post_init__(self):
        d = tuple(None if x is None else _q(x) for x in self.delta)
        if len(d) != self.g // 2 + 1:
            raise ValueError(f"need {self.g // 2 + 1} delta coefficients for g={self.g}, got {len(d)}")
        object.__setattr__(self, "delta", d)
        object.__setattr__(self, "lam", _q(self.lam))

    @property
    def a(self) -> Fraction:
        return self.lam

    def b(self, j: int) -> Fraction:
        if self.delta[j] is None:
            raise UnknownCoefficient(f"delta_{j} coefficient not known")
        return -self.delta[j]

    def scale(self, k) -> "MgClass":
        return MgClass(self.g, k * self.lam, tuple(None if x is None else k * x for x in self.delta))


@dataclass(frozen=True)
class MgnClass:
    """Class on M_{g,n}-bar whose delta_{j:S} coefficient depends only on |S|.

    Boundary keys (j, t) are canonicalized under delta_{j:S} = delta_{g-j:S^c}.
    """
    g: int
    n: int
    lam: Coef
    psi: Coef
    d_irr: Coef
    boundary: dict = field(default_factory=dict)

    def __post_init__(self):
        canon: dict = {}
        for (j, t), v in self.boundary.items():
            key = self.key(j, t)
            v = v if isinstance(v, Coef) else Coef(_q(v))
            if key in canon and canon[key] != v:
                raise ValueError(f"conflicting values for delta_{j}:{t} and its alias")
            canon[key] = v
        object.__setattr__(self, "boundary", canon)

    def key(self, j: int, t: int) -> tuple[int, int]:
        if not (0 <= j <= self.g and 0 <= t <= self.n):
            raise ValueError(f"no boundary divisor delta_{j}:{t} on M_{self.g},{self.n}")
        if (j == 0 and t < 2) or (j == self.g and self.n - t < 2):
            raise ValueError(f"delta_{j}:{t} is not a stable boundary stratum")
        return min((j, t), (self.g - j, self.n - t))

    def delta(self, j: int, t: int) -> Coef:
        return self.boundary.get(self.key(j, t), Coef(None, UNKNOWN))

    def b(self, j: int, t: int) -> Fraction:
        return -self.delta(j, t).exact()

    def scale(self, k) -> "MgnClass":
        def sc(c: Coef):
            if c.status == EXACT:
                return Coef(k * c.value)
            if c.status == LOWER_BOUND and k > 0:
                return Coef(k * c.value, LOWER_BOUND)
            return Coef(None, UNKNOWN)
        return MgnClass(self.g, self.n, sc(self.lam), sc(self.psi), sc(self.d_irr),
                        {key: sc(v) for key, v in self.boundary.items()})

    def __add__(self, other: "MgnClass") -> "MgnClass":
        if (self.g, self.n) != (other.g, other.n):
            raise SpaceMismatch("classes live on different moduli spaces")

        def add(x: Coef, y: Coef):
            if x.status == y.status == EXACT:
                return Coef(x.value + y.value)
            return Coef(None, UNKNOWN)
        keys = set(self.boundary) | set(other.boundary)
        zero = Coef(Fraction(0))
        return MgnClass(self.g, self.n, add(self.lam, other.lam), add(self.psi, other.psi),
                        add(self.d_irr, other.d_irr),
                        {k: add(self.boundary.get(k, zero), other.boundary.get(k, zero)) for k in keys})


@dataclass(frozen=True)
class TestCurve:
    kind: str  # C0, C1, Cj, R on M_g; C0n, Ctilde, CbarJT on M_{g,n}
    g: int
    n: int = 0
    j: int = 0
    t: int = 0


M_G_CURVES = {"C0", "C1", "Cj", "R"}
M_GN_CURVES = {"C0n", "Ctilde", "CbarJT"}


def pair(curve: TestCurve, cls) -> Fraction:
    """Intersection number of a test curve with a divisor class."""
    if curve.kind not in M_G_CURVES | M_GN_CURVES:
        raise UnknownCurve(curve.kind)
    if isinstance(cls, MgClass):
        if curve.kind not in M_G_CURVES or curve.g != cls.g:
            raise SpaceMismatch(f"{curve.kind} on genus {curve.g} against a class on M_{cls.g}")
        g = cls.g

        def d(j):
            return -cls.b(j) if j < len(cls.delta) else Fraction(0)
        if curve.kind == "C0":
            return -(2 * g - 2) * d(0) + d(1)
        if curve.kind == "C1":
            return -(2 * g - 4) * d(1)
        if curve.kind == "Cj":
            if not 2 <= curve.j <= g // 2:
                raise ParameterRange(f"C^j needs 2 <= j <= [g/2], got j={curve.j}")
            return -(2 * curve.j - 2) * d(curve.j)
        return cls.lam + 12 * d(0) - d(1)

    if curve.kind not in M_GN_CURVES or (curve.g, curve.n) != (cls.g, cls.n):
        raise SpaceMismatch(f"{curve.kind} on M_{curve.g},{curve.n} against M_{cls.g},{cls.n}")
    g, n = cls.g, cls.n
    if curve.kind == "C0n":
        return -(2 * g - 2) * cls.d_irr.exact() + cls.delta(1, 0).exact() + n * cls.psi.exact()
    if curve.kind == "Ctilde":
        j = curve.j
        if n != 1 or not 1 <= j <= g - 1:
            raise ParameterRange("the curve C~_j lives on M_{g,1} with 1 <= j <= g-1")
        return cls.psi.exact() + cls.delta(g - j, 1).exact() - (2 * j - 1) * cls.delta(j, 1).exact()
    # CbarJT: x_1 moves on the genus j component carrying x_1..x_t
    j, t = curve.j, curve.t
    if not (0 <= j <= g - 1 and 1 <= t <= n):
        raise ParameterRange(f"C-bar_(j,t) needs 0 <= j <= g-1, 1 <= t <= n, got ({j}, {t})")
    total = (2 * j + 2 * t - 3) * cls.psi.exact()
    if t >= 2:
        total += (t - 1) * cls.delta(0, 2).exact()
    for tt, sign in ((t, -1), (t - 1, 1)):
        if j == 0 and tt < 2:
            continue  # delta_{0:S} with |S| < 2 is not a divisor
        total += sign * cls.delta(j, tt).exact()
    return total


@dataclass(frozen=True)
class Undefined:
    index: int


def slope(cls: MgClass):
    """(a / b_0, a / min_j b_j).

    The second is Undefined, naming the first offending index, when some b_j
    is not positive or not known.
    """
    if cls.lam <= 0:
        raise NonpositiveLambda(f"lambda coefficient {cls.lam}")
    b0 = cls.b(0)
    if b0 == 0:
        raise ZeroB0("b_0 = 0")
    bad = next((j for j, x in enumerate(cls.delta) if x is None or x >= 0), None)
    if bad is not None:
        return cls.lam / b0, Undefined(bad)
    return cls.lam / b0, cls.lam / min(-x for x in cls.delta)


def bn_class(g: int) -> MgnClass:
    """Pull-back to M_{g,1} of the Brill-Noether divisor."""
    if g < 2:
        raise ParameterRange(f"g >= 2, got {g}")
    return MgnClass(g, 1, Coef(Fraction(g + 3)), Coef(Fraction(0)), Coef(Fraction(-(g + 1), 6)),
                    {(j, 1): Coef(Fraction(-j * (g - j))) for j in range(1, g)})


def w_class(g: int) -> MgnClass:
    """Weierstrass divisor on M_{g,1}."""
    if g < 2:
        raise ParameterRange(f"g >= 2, got {g}")
    return MgnClass(g, 1, Coef(Fraction(-1)), Coef(Fraction(comb(g + 1, 2))), Coef(Fraction(0)),
                    {(j, 1): Coef(Fraction(-comb(g - j + 1, 2))) for j in range(1, g)})


def display_bn_w(g: int) -> tuple[MgnClass, MgnClass]:
    """BN and W as written inside the Khosla argument: psi alone and -sum delta_{j:1}."""
    bn = MgnClass(g, 1, Coef(Fraction(g + 3)), Coef(Fraction(0)), Coef(Fraction(-(g + 1), 6)),
                  {(j, 1): Coef(Fraction(-1)) for j in range(1, g)})
    w = MgnClass(g, 1, Coef(Fraction(-1)), Coef(Fraction(1)), Coef(Fraction(0)),
                 {(j, 1): Coef(Fraction(-comb(g - j + 1, 2))) for j in range(1, g)})
    return bn, w


def lin_mu_nu(r: int, s: int) -> tuple[Fraction, Fraction]:
    """mu and nu per c_r, as printed in the Khosla argument."""
    g = r * s + s
    den = (g - 2) * (g - 1) * (g + 1)
    if den == 0 or r + s + 1 == 0:
        raise DegenerateDenominator(f"(rs+s-2)(rs+s-1)(rs+s+1) = 0 at r={r}, s={s}")
    nu = Fraction(r * (r + 2), (g - 1) * (g + 1))
    mu = Fraction(r * (r + 1) * (r + 2) * (s - 1) * (s + 1) * (g + 4), 2 * (s + r + 1) * den)
    return mu, nu


def lin_bridge(r: int, s: int) -> dict:
    """Compare the two normalizations of (mu, nu) and derive mu from the C-bar_1 test curve.

    nu from ramification counting: N (r+1)(d + r(g-1)) / ((g-1) g (g+1)).
    mu from C-bar_1 . Lin(1) = (2g-4)((g-1) mu + C(g,2) nu), where the left side
    is the Schubert sum of the three limit linear series contributions.
    """
    g, d = r * s + s, r * s + r
    mu, nu = lin_mu_nu(r, s)
    N = castelnuovo(g, r, d)
    nu_pb = Fraction(lin_one_total_ramification(g, r, d), (g - 1) * g * (g + 1))
    mu_pb = Fraction(N * r * (r + 1) * (r + 2) * (s - 1) * (s + 1) * (g + 4),
                     2 * (s + r + 1) * (g - 2) * (g - 1) * (g + 1))
    out = {"N": N, "mu": mu, "nu": nu, "mu_pointedbn": mu_pb, "nu_pointedbn": nu_pb,
           "mu_ok": mu_pb == N * mu, "nu_ok": nu_pb == N * nu, "d+r(g-1)": d + r * (g - 1),
           "rs(r+2)": r * s * (r + 2)}
    if r >= 2:
        schubert_sum, closed = barC1_lin_pairing(r, s)
        mu_curve = (Fraction(schubert_sum, 2 * g - 4) - comb(g, 2) * nu_pb) / (g - 1)
        out.update(c1_schubert=schubert_sum, c1_closed=closed, mu_from_curve=mu_curve,
                   mu_curve_ok=mu_curve == mu_pb)
    return out


def lin_one_class(r: int, s: int, display: bool = False):
    """(mu, nu, mu BN + nu W) on M_{g,1}, per c_r.

    ``display=True`` uses the shortened BN and W written in the Khosla
    argument instead of the full classes.
    """
    g = r * s + s
    mu, nu = lin_mu_nu(r, s)
    bn, w = display_bn_w(g) if display else (bn_class(g), w_class(g))
    return mu, nu, bn.scale(mu) + w.scale(nu)


def khosla_range(s: int) -> range:
    g = s * (2 * s + 1)
    return range(max(2, (g + 1) // 2), s * (2 * s - 1) + 1)


def khosla_bj_via_pairing(s: int, j: int, display: bool = False) -> Fraction:
    """B_j / c_r = (s-1)/(j-1) * C~_j . Lin(1), Lin(1) per c_r, with r = 2s."""
    if s < 2:
        raise ParameterRange(f"s >= 2, got {s}")
    if j not in khosla_range(s):
        raise ParameterRange(f"need g/2 <= j <= s(2s-1), j >= 2; got j={j} for s={s}")
    g = s * (2 * s + 1)
    _, _, cls = lin_one_class(2 * s, s, display)
    return Fraction(s - 1, j - 1) * pair(TestCurve("Ctilde", g, 1, j), cls)
