"""Ramification sequences and the partitions they correspond to.

Two orderings live side by side. Ramification sequences are weakly increasing
(alpha_0 <= ... <= alpha_r); partitions are weakly decreasing with zeros dropped.
Converting between them always goes through the two functions below.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class PartTooLarge(ValueError):
    pass


def partition(parts) -> tuple[int, ...]:
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return tuple(x for x in p if x)


@dataclass(frozen=True)
class RamSeq:
    alpha: tuple[int, ...]
    width: int  # d - r, the largest allowed entry

    def __post_init__(self):
        a = tuple(self.alpha)
        object.__setattr__(self, "alpha", a)
        if not a:
            raise ValueError("empty ramification sequence")
        if a[0] < 0 or a[-1] > self.width or any(x > y for x, y in zip(a, a[1:])):
            raise ValueError(f"{a} is not a ramification sequence in [0, {self.width}]")

    @property
    def r(self) -> int:
        return len(self.alpha) - 1

    @property
    def weight(self) -> int:
        return sum(self.alpha)


def ramseq_to_partition(s: RamSeq) -> tuple[int, ...]:
    return tuple(x for x in reversed(s.alpha) if x)


def partition_to_ramseq(p, r: int, width: int) -> RamSeq:
    p = tuple(p)
    if len(p) > r + 1:
        raise ValueError(f"{p} has more than {r + 1} parts")
    padded = p + (0,) * (r + 1 - len(p))
    return RamSeq(tuple(reversed(padded)), width)


def enumerate_ramseqs(r: int, lower, upper, total: int) -> list[tuple[int, ...]]:
    """Weakly increasing (a_0..a_r) with lower[i] <= a_i <= upper[i] and sum = total.

    ``lower`` and ``upper`` may be scalars or per-position lists. A strict first
    step such as 0 = b_0 < b_1 is expressed as lower = [0, 1, 1, ...] with
    upper[0] = 0. Output is lexicographically sorted.
    """
    n = r + 1
    lo = [lower] * n if isinstance(lower, int) else list(lower)
    hi = [upper] * n if isinstance(upper, int) else list(upper)
    if len(lo) != n or len(hi) != n:
        raise ValueError("bound lists must have r+1 entries")
    out: list[tuple[int, ...]] = []

    def rec(i, prev, left, acc):
        if i == n:
            if left == 0:
                out.append(tuple(acc))
            return
        room = sum(hi[i + 1:])
        for a in range(max(prev, lo[i]), hi[i] + 1):
            if a * (n - i) > left:
                break  # later entries are at least a
            if a + room < left:
                continue
            acc.append(a)
            rec(i + 1, a, left - a, acc)
            acc.pop()

    rec(0, 0, total, [])
    return out


def elementary_to_monomials(lam, num_vars: int) -> dict[tuple[int, ...], int]:
    """Expand e_{lam_1} e_{lam_2} ... in num_vars variables into monomials.

    The coefficient of x^mu is the number of 0/1 matrices with row sums lam and
    column sums mu.
    """
    lam = partition(lam)
    if lam and lam[0] > num_vars:
        raise PartTooLarge(f"part {lam[0]} exceeds {num_vars} variables")
    return dict(_e_to_m(lam, num_vars))


@lru_cache(maxsize=None)
def _e_to_m(lam: tuple[int, ...], n: int) -> tuple:
    # row by row: each row picks a subset of columns of size lam[k]
    acc = {(0,) * n: 1}
    for part in lam:
        nxt: dict[tuple[int, ...], int] = {}
        for mono, c in acc.items():
            for cols in combinations(range(n), part):
                m = list(mono)
                for j in cols:
                    m[j] += 1
                key = tuple(m)
                nxt[key] = nxt.get(key, 0) + c
        acc = nxt
    return tuple(sorted(acc.items()))
