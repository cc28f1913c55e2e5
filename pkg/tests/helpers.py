"""Shared random generators for the test suite (seeded, deterministic)."""

from fractions import Fraction
from math import gcd
from random import Random

from cstar_surfaces import DpdPair, QDivisor

BASE_POINTS = [Fraction(n) for n in range(-3, 4)] + [Fraction(1, 2), Fraction(-2, 3)]


def random_divisor(rng: Random, points, max_den: int = 8,
                   lo: int = -16, hi: int = 16) -> QDivisor:
    entries = {}
    for p in points:
        den = rng.randint(1, max_den)
        num = rng.randint(lo, hi)
        if num:
            entries[p] = Fraction(num, den)
    return QDivisor(entries)


def random_pair(rng: Random, max_points: int = 4, max_den: int = 8) -> DpdPair:
    """A random divisor pair with D+ + D- <= 0 (the total is drawn <= 0)."""
    pts = rng.sample(BASE_POINTS, k=rng.randint(0, max_points))
    d_plus = random_divisor(rng, pts, max_den)
    total_entries = {}
    for p in pts:
        den = rng.randint(1, max_den)
        num = rng.randint(-3 * den, 0)
        if num:
            total_entries[p] = Fraction(num, den)
    total = QDivisor(total_entries)
    return DpdPair(d_plus, total - d_plus)


def coprime_fractions(max_den: int):
    """All reduced e/m with 1 <= m <= max_den and 0 <= e < m (e=0 only for m=1)."""
    out = []
    for m in range(1, max_den + 1):
        for e in range(m):
            if gcd(e, m) == 1:
                out.append((e, m))
    return out
