"""Affine toric surfaces and cyclic quotient singularity types.

The surface attached to coprime parameters (d, e) with 0 <= e < d is the
spectrum of the semigroup algebra spanned by the monomials t^a v^b with
b >= 0 and a*d - b*e >= 0; it is the quotient of the plane by the cyclic
group of order d acting with weights (1, e).  This module enumerates the
minimal generators of such semigroups and normalizes and compares
singularity types, serving as the independent oracle for the divisor-pair
singularity formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class ConeParams:
    """Parameters (d, e) of a two-dimensional toric surface cone.

    Requires d >= 1, 0 <= e < d and gcd(e, d) = 1; d = 1 forces e = 0.
    """

    d: int
    e: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if not 0 <= self.e < self.d and not (self.d == 1 and self.e == 0):
            raise ValueError("e must satisfy 0 <= e < d")
        if gcd(self.e, self.d) != 1:
            raise ValueError(f"gcd(e, d) must be 1, got ({self.e}, {self.d})")


@dataclass(frozen=True)
class QuotSingType:
    """A normalized cyclic quotient singularity type (d, e).

    d = 1 is the smooth marker.  Two types are isomorphic iff the orders
    agree and the weights are equal or inverse mod d.
    """

    d: int
    e: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if not 0 <= self.e < self.d and not (self.d == 1 and self.e == 0):
            raise ValueError("e must satisfy 0 <= e < d")
        if gcd(self.e, self.d) != 1:
            raise ValueError(f"gcd(e, d) must be 1, got ({self.e}, {self.d})")

    @property
    def is_smooth(self) -> bool:
        return self.d == 1

    def render(self) -> str:
        return "smooth" if self.is_smooth else f"1/{self.d}(1,{self.e})"

    def __str__(self) -> str:
        return self.render()


SMOOTH = QuotSingType(1, 0)


def normalize_type(d: int, e: int) -> QuotSingType:
    """Reduce a weight e into [0, d); rejects non-coprime data."""
    if d < 1:
        raise ValueError("d must be >= 1")
    e %= d
    if gcd(e, d) != 1:
        raise ValueError(f"malformed singularity data: gcd({e}, {d}) != 1")
    return QuotSingType(d, e)


def types_isomorphic(t1: QuotSingType, t2: QuotSingType) -> bool:
    """(d, e) and (d', e') give the same germ iff d = d' and e = e' or e*e' = 1 mod d."""
    if t1.d != t2.d:
        return False
    return t1.e == t2.e or (t1.e * t2.e) % t1.d == 1 % t1.d


def semigroup_contains(p: tuple[int, int], cone: ConeParams) -> bool:
    """Whether a lattice point (a, b) lies in the dual-cone semigroup of (d, e)."""
    a, b = p
    return b >= 0 and a * cone.d - b * cone.e >= 0


def hilbert_basis(cone: ConeParams) -> list[tuple[int, int]]:
    """Minimal generating set of the dual-cone semigroup, lex-sorted.

    The extremal primitive generators are (1, 0) and (e, d), so every
    minimal generator lies in the parallelogram they span; enumerating the
    bounding box and discarding decomposables is exact at this scale.

    >>> hilbert_basis(ConeParams(2, 1))
    [(1, 0), (1, 1), (1, 2)]
    """
    d, e = cone.d, cone.e
    box = [(a, b)
           for a in range(0, e + 2)
           for b in range(0, d + 1)
           if (a, b) != (0, 0) and semigroup_contains((a, b), cone)]

    def decomposable(p: tuple[int, int]) -> bool:
        a, b = p
        for a1 in range(0, a + 1):
            for b1 in range(0, b + 1):
                q = (a1, b1)
                r = (a - a1, b - b1)
                if q != (0, 0) and r != (0, 0) and \
                        semigroup_contains(q, cone) and semigroup_contains(r, cone):
                    return True
        return False

    return sorted(p for p in box if not decomposable(p))


def hirzebruch_jung(num: int, den: int) -> list[int]:
    """Continued fraction num/den = c1 - 1/(c2 - 1/(...)) with all ci >= 2."""
    if den < 1 or num <= 0:
        raise ValueError("need num > 0 and den >= 1")
    out = []
    while den:
        c = -(-num // den)  # ceil
        out.append(c)
        num, den = den, c * den - num
    return out


@dataclass(frozen=True)
class QuotientAction:
    """The cyclic group action whose invariants give the toric surface ring.

    The group of order d acts on the plane C[u, v] by u -> zeta*u,
    v -> zeta^weight_v * v.
    """

    order: int
    weight_u: int
    weight_v: int

    def render(self) -> str:
        if self.order == 1:
            return "trivial group"
        return f"Z_{self.order} acting with weights ({self.weight_u},{self.weight_v})"


def quotient_action(cone: ConeParams) -> QuotientAction:
    """The order-d cyclic action with weights (1, e) presenting the cone's ring."""
    return QuotientAction(cone.d, 1, cone.e)


@dataclass(frozen=True)
class LatticeCone:
    """A two-dimensional cone spanned by two primitive independent rays."""

    ray1: tuple[int, int]
    ray2: tuple[int, int]

    def __post_init__(self):
        for ray in (self.ray1, self.ray2):
            if gcd(ray[0], ray[1]) != 1:
                raise ValueError(f"ray {ray} is not primitive")
        if _cross(self.ray1, self.ray2) == 0:
            raise ValueError("rays must be linearly independent")


def _cross(v: tuple[int, int], w: tuple[int, int]) -> int:
    return v[0] * w[1] - v[1] * w[0]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _complement(v: tuple[int, int]) -> tuple[int, int]:
    """A vector (p, q) with cross((p, q), v) = 1, minimizing |q|."""
    x, y = v
    g, s, t = _ext_gcd(y, -x)  # s*y - t*x = 1
    assert g == 1, "ray must be primitive"
    p, q = s, t
    # Shifts (p, q) + k*(x, y) preserve the determinant; minimize |q|.
    if y:
        r = q % abs(y)
        new_q = r if r <= abs(y) - r else r - abs(y)
        k = (new_q - q) // y
        p, q = p + k * x, new_q
    else:
        p %= abs(x)
    return (p, q)


def type_of_lattice_cone(cone: LatticeCone) -> QuotSingType:
    """Quotient singularity type of the semigroup ring of cone ∩ Z².

    Change basis so that one ray becomes a basis vector; the index of the
    cone is |det(ray1, ray2)| and the weight is read off from the second
    ray's coordinates in the new basis.
    """
    v, w = cone.ray1, cone.ray2
    if _cross(v, w) > 0:
        v, w = w, v  # orientation convention: cross(v, w) < 0
    delta = -_cross(v, w)
    p, q = _complement(v)
    # w = delta' * v + delta * (p, q); the type is (delta, delta' mod delta).
    e = p * w[1] - q * w[0]
    return normalize_type(delta, e)
