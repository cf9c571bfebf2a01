"""Exact scalar helpers, mostly determinants and factorial bookkeeping.

Everything above this module works over ``Fraction``. Floats never enter.
``math.factorial`` keeps no shared mutable state, so the helpers here are safe
to call from any number of threads or worker processes.
"""
from fractions import Fraction
from math import comb, factorial, lcm

Rational = Fraction


class NonSquare(ValueError):
    pass


def fact(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return factorial(n)


def inv_factorial_or_zero(n: int) -> Fraction:
    """1/n!, with the Harris-Tu convention that 1/n! = 0 for n < 0."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def binom(n: int, k: int) -> int:
    # C(n, k) for any integer n (upper index may be negative), 0 when k < 0
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    # C(-m, k) = (-1)^k C(m+k-1, k)
    return (-1) ** k * comb(-n + k - 1, k)


def as_matrix(rows) -> list[list[Fraction]]:
    m = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != len(m) for row in m):
        raise NonSquare(f"{len(m)} rows but row lengths {[len(r) for r in m]}")
    return m


def determinant(rows) -> Fraction:
    """Gaussian elimination with exact pivots."""
    m = as_matrix(rows)
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for i in range(col + 1, n):
            f = m[i][col] / p
            if f:
                row, prow = m[i], m[col]
                for k in range(col, n):
                    row[k] -= f * prow[k]
    return det


def determinant_bareiss(rows) -> Fraction:
    """Fraction-free elimination. Rational input is first cleared to integers."""
    m = as_matrix(rows)
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    ints = []
    for row in m:
        den = lcm(*(x.denominator for x in row))
        scale /= den
        ints.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if ints[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if ints[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            ints[k], ints[swap] = ints[swap], ints[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                ints[i][j] = (ints[i][j] * ints[k][k] - ints[i][k] * ints[k][j]) // prev
        prev = ints[k][k]
    return sign * ints[n - 1][n - 1] * scale
