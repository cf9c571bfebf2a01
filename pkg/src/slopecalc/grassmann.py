"""Cohomology of the Grassmannian G(r, d) of r-planes in P^d.

Schubert classes are keyed by partitions fitting in the (r+1) x (d-r) box.
The geometric side of the code speaks in ramification sequences; ``sigma``
and the helpers below do the translation.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .combinat import RamSeq, enumerate_ramseqs, partition, ramseq_to_partition
from .numeric import fact


class AmbientMismatch(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class DimensionCondition(ValueError):
    pass


class NonzeroRho(ValueError):
    pass


class ParameterRange(ValueError):
    pass


@dataclass(frozen=True)
class Grassmannian:
    r: int
    d: int

    def __post_init__(self):
        if not 0 <= self.r < self.d:
            raise ParameterRange(f"G({self.r},{self.d}) needs 0 <= r < d")

    @property
    def rows(self) -> int:
        return self.r + 1

    @property
    def cols(self) -> int:
        return self.d - self.r

    @property
    def dim(self) -> int:
        return self.rows * self.cols

    def fits(self, lam) -> bool:
        return len(lam) <= self.rows and (not lam or lam[0] <= self.cols)

    def complement(self, lam) -> tuple[int, ...]:
        padded = tuple(lam) + (0,) * (self.rows - len(lam))
        return partition(self.cols - x for x in reversed(padded))


@dataclass(frozen=True)
class GrassClass:
    ambient: Grassmannian
    terms: dict = field(default_factory=dict)  # partition -> int

    def __mul__(self, other):
        return lr_multiply(self, other)

    def __add__(self, other):
        _same(self, other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return GrassClass(self.ambient, {k: v for k, v in out.items() if v})

    def scale(self, k: int):
        return GrassClass(self.ambient, {lam: k * c for lam, c in self.terms.items() if k * c})

    def codims(self) -> set[int]:
        return {sum(lam) for lam in self.terms}


def _same(a: GrassClass, b: GrassClass):
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient} vs {b.ambient}")


def sigma(alpha, G: Grassmannian) -> GrassClass:
    """The Schubert cycle of a ramification sequence, or 0 if it leaves the box."""
    alpha = tuple(alpha)
    if len(alpha) != G.rows:
        raise ParameterRange(f"{alpha} needs {G.rows} entries")
    if alpha[0] < 0 or alpha[-1] > G.cols:
        return GrassClass(G, {})
    lam = ramseq_to_partition(RamSeq(alpha, G.cols))
    return GrassClass(G, {lam: 1})


def cusp(G: Grassmannian) -> GrassClass:
    # sigma_(0,1,...,1): a single column of height r
    return GrassClass(G, {(1,) * G.r: 1} if G.r else {(): 1})


def unit(G: Grassmannian) -> GrassClass:
    return GrassClass(G, {(): 1})


# Littlewood-Richardson: add the rows of mu one label at a time as horizontal
# strips and keep the fillings whose reverse reading word is a lattice word.

def lr_coefficients(lam, mu, rows: int, cols: int) -> dict[tuple[int, ...], int]:
    lam, mu = partition(lam), partition(mu)
    if not mu:
        return {lam: 1}
    start = tuple(lam) + (0,) * (rows - len(lam))
    if len(lam) > rows:
        return {}
    out: dict[tuple[int, ...], int] = {}
    filling = [[] for _ in range(rows)]

    def strips(shape, k):
        # all horizontal strips of size mu[k] added to shape inside the box
        res = []

        def rec(i, left, new):
            if i == rows:
                if left == 0:
                    res.append(tuple(new))
                return
            cap = cols if i == 0 else shape[i - 1]
            for add in range(min(left, cap - shape[i]), -1, -1):
                new.append(shape[i] + add)
                rec(i + 1, left - add, new)
                new.pop()

        rec(0, mu[k], [])
        return res

    def lattice_ok() -> bool:
        counts = [0] * (len(mu) + 1)
        for row in filling:
            for label in reversed(row):
                counts[label] += 1
                if label > 1 and counts[label] > counts[label - 1]:
                    return False
        return True

    def rec(shape, k):
        if k == len(mu):
            nu = partition(shape)
            out[nu] = out.get(nu, 0) + 1
            return
        for new in strips(shape, k):
            for i in range(rows):
                filling[i].extend([k + 1] * (new[i] - shape[i]))
            if lattice_ok():
                rec(new, k + 1)
            for i in range(rows):
                del filling[i][len(filling[i]) - (new[i] - shape[i]):]

    rec(start, 0)
    return out


def lr_multiply(a: GrassClass, b: GrassClass) -> GrassClass:
    _same(a, b)
    G = a.ambient
    out: dict[tuple[int, ...], int] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, c in _lr_cached(lam, mu, G.rows, G.cols).items():
                out[nu] = out.get(nu, 0) + ca * cb * c
    return GrassClass(G, {k: v for k, v in out.items() if v})


@lru_cache(maxsize=None)
def _lr_cached(lam, mu, rows, cols):
    # LR coefficients are symmetric in (lam, mu); fill with the shorter one
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    return lr_coefficients(lam, mu, rows, cols)


def times_cusp(c: GrassClass) -> GrassClass:
    """Multiply by sigma_(0,1,...,1) with the dual Pieri rule (add a vertical r-strip)."""
    G = c.ambient
    out: dict[tuple[int, ...], int] = {}
    for lam, k in c.terms.items():
        for nu in _vertical_strips(lam, G.r, G.rows, G.cols):
            out[nu] = out.get(nu, 0) + k
    return GrassClass(G, out)


@lru_cache(maxsize=None)
def _vertical_strips(lam, size, rows, cols):
    base = list(lam) + [0] * (rows - len(lam))
    res = []
    for picked in combinations(range(rows), size):
        new = base[:]
        for i in picked:
            new[i] += 1
        if new[0] <= cols and all(new[i] <= new[i - 1] for i in range(1, rows)):
            res.append(partition(new))
    return tuple(res)


@lru_cache(maxsize=None)
def cusp_power(g: int, r: int, d: int) -> GrassClass:
    G = Grassmannian(r, d)
    if g == 0:
        return unit(G)
    return times_cusp(cusp_power(g - 1, r, d))


def pairing(a: GrassClass, b: GrassClass) -> int:
    _same(a, b)
    G = a.ambient
    ca, cb = a.codims(), b.codims()
    if ca and cb and (len(ca) > 1 or len(cb) > 1 or ca.pop() + cb.pop() != G.dim):
        raise DegreeMismatch(f"codimensions {a.codims()} and {b.codims()} in dim {G.dim}")
    return sum(c * b.terms.get(G.complement(lam), 0) for lam, c in a.terms.items())


def degree(c: GrassClass) -> int:
    """Coefficient of the point class."""
    G = c.ambient
    return c.terms.get((G.cols,) * G.rows, 0)


def schubert_number_lr(alpha, g: int, G: Grassmannian) -> int:
    """sigma_alpha . sigma_cusp^g by LR; 0 when alpha leaves the box or the degree is wrong."""
    alpha = tuple(alpha)
    if G.r * g + sum(alpha) != G.dim:
        return 0
    s = sigma(alpha, G)
    if not s.terms:
        return 0
    return pairing(cusp_power(g, G.r, G.d), s)


def schubert_number_closed(alpha, g: int, G: Grassmannian) -> int:
    """g! prod_{i<j}(a_j - a_i + j - i) / prod_i (g - d + i + a_i + r)!"""
    alpha = tuple(alpha)
    r, d = G.r, G.d
    if len(alpha) != r + 1:
        raise ParameterRange(f"{alpha} needs {r + 1} entries")
    if r * g + sum(alpha) != G.dim:
        raise DimensionCondition(f"r*g + |alpha| = {r * g + sum(alpha)} but dim = {G.dim}")
    num = fact(g)
    for i in range(r + 1):
        for j in range(i + 1, r + 1):
            num *= alpha[j] - alpha[i] + j - i
    den = 1
    for i in range(r + 1):
        k = g - d + i + alpha[i] + r
        if k < 0:
            return 0
        den *= fact(k)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise ArithmeticError(f"non-integral Schubert number {q}")
    return int(q)


def rho(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def castelnuovo(g: int, r: int, d: int) -> int:
    """Number of g^r_d on a general curve of genus g when rho = 0."""
    if rho(g, r, d) != 0:
        raise NonzeroRho(f"rho({g},{r},{d}) = {rho(g, r, d)}")
    num = fact(g)
    for i in range(1, r + 1):
        num *= fact(i)
    den = 1
    for i in range(r + 1):
        den *= fact(g - d + r + i)
    return num // den


def bn_params(r: int, s: int) -> tuple[int, int]:
    """(g, d) = (rs+s, rs+r), the rho = 0 family used throughout."""
    if r < 1 or s < 1:
        raise ParameterRange(f"need r, s >= 1, got r={r}, s={s}")
    return r * s + s, r * s + r


def _box_number(alpha, g: int, G: Grassmannian) -> int:
    # closed form, but sequences that leave the box give the zero class
    alpha = tuple(alpha)
    if alpha[0] < 0 or alpha[-1] > G.cols:
        return 0
    return schubert_number_closed(alpha, g, G)


@dataclass
class LimitCounts:
    N: list  # (alpha, N_{g-j,alpha})
    M: list  # (beta, M_{j,beta})
    Q: list  # (beta, Q_{g-j,beta})


def limitlinj_counts(r: int, s: int, j: int) -> LimitCounts:
    g, d = bn_params(r, s)
    if not g // 2 <= j <= g - 2:
        raise ParameterRange(f"need [g/2] <= j <= g-2 with g={g}, got j={j}")
    G = Grassmannian(r, d)
    P1 = enumerate_ramseqs(r, 0, s, j)
    P2 = [b for b in enumerate_ramseqs(r, 0, s + 1, j + 1) if r == 0 or b[r - 1] <= s]
    P3 = enumerate_ramseqs(r, [0] + [1] * r, [0] + [s + 1] * r, r + 1 + j)
    N = [(a, _box_number(tuple(j - x for x in reversed(a)), g - j, G)) for a in P1]
    # M lives in G(r, r+j); its codimension r*j + j + 1 always overshoots the
    # dimension (r+1)*j by one, so the product is the zero class
    small = Grassmannian(r, r + j)
    M = []
    for b in P2:
        prod = lr_multiply(cusp_power(j, r, r + j), sigma(b, small))
        M.append((b, degree(prod)))
    Q = [(b, _box_number(tuple(j + 1 - x for x in reversed(b[1:])) + (j + 1,), g - j, G))
         for b in P3]
    return LimitCounts(N, M, Q)


def lin_one_total_ramification(g: int, r: int, d: int) -> int:
    return castelnuovo(g, r, d) * (r + 1) * (d + r * (g - 1))


def barC1_lin_pairing(r: int, s: int) -> tuple[int, Fraction]:
    """(Schubert sum, closed form) for the elliptic-tail test curve against Lin(1).

    The three contributions come from the vanishing sequences the limit linear
    series can have at the attaching point of the moving elliptic tail.
    """
    g, d = bn_params(r, s)
    if g < 3 or r < 2:
        raise ParameterRange(f"need g >= 3 and r >= 2, got r={r}, s={s}")
    N = castelnuovo(g, r, d)
    G, G1 = Grassmannian(r, d), Grassmannian(r, d - 1)
    cusp_like = (0, 1) + (2,) * (r - 2) + (3,)
    flat = (0,) + (2,) * r
    low = (0, 0) + (1,) * (r - 1)
    total = (3 * (g - 1) * _box_number(cusp_like, g - 2, G)
             + (g - 1) * ((r + 2) ** 2 - 1) * _box_number(flat, g - 2, G)
             + (g - 1) * (r * r - 1) * _box_number(low, g - 2, G1))
    closed = Fraction(N * r * (r + 1) * (r + 2) * (r * s + 2 * s * s + s - 4), s + r + 1)
    return total, closed


def schubert_sum_identity(r: int, s: int, j: int, t: int, constraint: str = "rj",
                          lower: str = "s") -> tuple[int, int, str]:
    """(N, sum over the limit linear series on C u_y Y) for the split curve.

    ``constraint`` picks the sum condition, "rj" (dimension-consistent) or "j"
    (as displayed). ``lower`` picks the bound on alpha_0: "s" uses max(0, j-s),
    "t" uses max(0, j-t), "none" uses 0.
    """
    g, d = bn_params(r, s)
    if not (1 <= t <= r + 1 and 0 <= j <= g - 1):
        raise ParameterRange(f"need 1 <= t <= r+1, 0 <= j <= g-1; got j={j}, t={t}")
    lo = {"s": max(0, j - s), "t": max(0, j - t), "none": 0}[lower]
    total = r * j if constraint == "rj" else j
    G = Grassmannian(r, d)
    rhs = 0
    for a in enumerate_ramseqs(r, lo, j, total):
        rhs += _box_number_any(a, g - j, G) * _box_number_any(tuple(r * s - x for x in reversed(a)), j, G)
    desc = f"sum(alpha) = {'r*j' if constraint == 'rj' else 'j'}, {lo} <= alpha_0, alpha_r <= {j}"
    return castelnuovo(g, r, d), rhs, desc


def _box_number_any(alpha, g: int, G: Grassmannian) -> int:
    # like _box_number, but a product of the wrong degree counts as 0
    if G.r * g + sum(alpha) != G.dim:
        return 0
    return _box_number(alpha, g, G)


def barCjt_lin_pairing(r: int, s: int, j: int, t: int) -> int:
    """alpha_{t-1}-weighted count of limit linear series on the split curve."""
    g, d = bn_params(r, s)
    if not (1 <= t <= r + 1 and 0 <= j <= g - 1):
        raise ParameterRange(f"need 1 <= t <= r+1, 0 <= j <= g-1; got j={j}, t={t}")
    G = Grassmannian(r, d)
    total = 0
    for a in enumerate_ramseqs(r, 0, j, r * j):
        w = a[t - 1]
        if w:
            total += w * _box_number(a, g - j, G) * _box_number(tuple(r * s - x for x in reversed(a)), j, G)
    return total
