"""Parabolic C*-surfaces over the affine line.

A single Q-divisor D on the t-line presents a positively graded normal
ring whose degree-n piece is the space of rational functions f with
div f + n*D >= 0.  Every such surface is the normalization of a
hypersurface u^d = P(t) v for a unique pair (d, P) in reduced form, and
its singularities are cyclic quotient points read off from the
coefficients of D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .divisors import (FactoredPoly, FactoredRatFn, Point, QDivisor,
                       function_from_divisor, pointwise_min,
                       poly_from_divisor)
from .toric import QuotSingType, normalize_type


@dataclass(frozen=True)
class DpPair:
    """The hypersurface datum (d, P) of a surface u^d = P(t) v.

    Outputs of :func:`canonical_dp` additionally satisfy the reducedness
    condition checked by :meth:`satisfies_star`; the type itself only
    requires d >= 1 and P a monic polynomial.
    """

    d: int
    p: FactoredPoly

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if not self.p.is_polynomial:
            raise ValueError("P must be a polynomial")

    def satisfies_star(self) -> bool:
        """Reducedness: d = 1 forces P = 1; for d >= 2 all root
        multiplicities lie in (0, d) and together with d have gcd 1."""
        if self.d == 1:
            return self.p.is_one
        mults = [m for _, m in self.p.roots()]
        return all(0 < m < self.d for m in mults) and gcd(self.d, *mults) == 1

    def to_json(self) -> dict:
        return {"d": self.d, "p": self.p.to_json()}

    def __str__(self) -> str:
        return f"(d = {self.d}, P = {self.p})"


def graded_piece(divisor: QDivisor, n: int) -> FactoredRatFn:
    """Monic generator of the degree-n piece as a free C[t]-module.

    The generator is the function with divisor -floor(n*D), so the
    degree-n piece is g_n * u^n * C[t].
    """
    if n < 0:
        raise ValueError("parabolic rings live in non-negative degrees")
    return function_from_divisor(-(n * divisor).floor())


def veronese_degree(divisor: QDivisor) -> int:
    """Least d >= 1 whose Veronese subring is a symmetric algebra.

    Equals the least d making d*D integral.
    """
    return divisor.denominator()


def canonical_dp(divisor: QDivisor) -> DpPair:
    """The unique reduced (d, P) with div(P)/d matching the fractional part of D."""
    fr = divisor.frac()
    d = fr.denominator()
    return DpPair(d, poly_from_divisor(d * fr))


def parabolic_from_equation(d: int, p: FactoredPoly) -> QDivisor:
    """Divisor div(P)/d of the normalization of u^d = P(t) v."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return p.divisor_of() * Fraction(1, d)


def parabolic_singularities(divisor: QDivisor) -> list[tuple[Point, QuotSingType]]:
    """Cyclic quotient singularities on the fixed point curve.

    A point a with D(a) = -e/d in lowest terms (d > 1) carries a quotient
    singularity of type (d, e mod d); integral coefficients are smooth.
    """
    out = []
    for a, c in divisor.items():
        d = c.denominator
        if d == 1:
            continue
        e = -c.numerator  # c = -e/d in lowest terms
        out.append((a, normalize_type(d, e)))
    return out


def dpd_from_generators_parabolic(
        gens: list[tuple[FactoredRatFn, int]]) -> QDivisor:
    """Divisor of the normalization of the ring generated by f_i * u^(m_i).

    Evaluates -min div(f_i)/m_i pointwise.
    """
    if not gens:
        raise ValueError("generator list must be non-empty")
    acc = None
    for f, m in gens:
        if m <= 0:
            raise ValueError(f"generator degrees must be positive, got {m}")
        cand = f.divisor_of() * Fraction(1, m)
        acc = cand if acc is None else pointwise_min(acc, cand)
    return -acc
