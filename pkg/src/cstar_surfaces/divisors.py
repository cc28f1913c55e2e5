"""Exact arithmetic on Q-divisors of the affine line.

Points of the line Spec C[t] are rational numbers, divisors are finite
formal sums of points with rational coefficients, and monic polynomials
are kept in factored form as multisets of rational roots.  Everything is
exact; there is no floating point anywhere.

The central datum is a pair of Q-divisors (D+, D-) with D+ + D- <= 0,
which presents a normal affine surface with a hyperbolic C*-action as a
graded subring of Frac(C[t])[u, 1/u].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Union

#: Points of the affine line are exact rational coordinates.
Point = Fraction

RatLike = Union[int, Fraction, str]


def rat(x: RatLike) -> Fraction:
    """Coerce an int, Fraction or string like ``"-3/2"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def format_rat(q: Fraction) -> str:
    """Render a rational as ``p/q``, or just ``p`` when integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class QDivisor:
    """A finite formal sum of rational points with rational coefficients.

    Stored sparsely: points with coefficient 0 are never kept, so
    structural equality coincides with mathematical equality.

    >>> D = QDivisor({0: Fraction(3, 2), 1: Fraction(-1, 2)})
    >>> D.floor()
    QDivisor({0: Fraction(1, 1), 1: Fraction(-1, 1)})
    >>> D.frac()
    QDivisor({0: Fraction(1, 2), 1: Fraction(1, 2)})
    >>> D.floor() + D.frac() == D
    True
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Union[Mapping, Iterable, None] = None):
        items = entries.items() if isinstance(entries, Mapping) else (entries or ())
        table: dict[Fraction, Fraction] = {}
        for point, coeff in items:
            p, c = rat(point), rat(coeff)
            c += table.get(p, 0)
            if c:
                table[p] = c
            else:
                table.pop(p, None)
        self._entries = table

    @classmethod
    def zero(cls) -> "QDivisor":
        return cls()

    @classmethod
    def single(cls, point: RatLike, coeff: RatLike) -> "QDivisor":
        return cls({rat(point): rat(coeff)})

    def value(self, point: RatLike) -> Fraction:
        """Coefficient at a point (0 off the support)."""
        return self._entries.get(rat(point), Fraction(0))

    def support(self) -> list[Fraction]:
        return sorted(self._entries)

    def items(self) -> list[tuple[Fraction, Fraction]]:
        return sorted(self._entries.items())

    @property
    def is_zero(self) -> bool:
        return not self._entries

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._entries.values())

    def __add__(self, other: "QDivisor") -> "QDivisor":
        table = dict(self._entries)
        for p, c in other._entries.items():
            table[p] = table.get(p, Fraction(0)) + c
        return QDivisor(table)

    def __neg__(self) -> "QDivisor":
        return QDivisor({p: -c for p, c in self._entries.items()})

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        return self + (-other)

    def __mul__(self, scalar: RatLike) -> "QDivisor":
        s = rat(scalar)
        return QDivisor({p: c * s for p, c in self._entries.items()})

    __rmul__ = __mul__

    def floor(self) -> "QDivisor":
        """Coefficient-wise round-down."""
        return QDivisor({p: Fraction(c.numerator // c.denominator)
                         for p, c in self._entries.items()})

    def frac(self) -> "QDivisor":
        """Fractional part: self - self.floor(), coefficients in [0, 1)."""
        return self - self.floor()

    def denominator(self) -> int:
        """Least d >= 1 with d * self integral (lcm of coefficient denominators)."""
        return lcm(1, *(c.denominator for c in self._entries.values()))

    def pointwise_le(self, other: "QDivisor") -> bool:
        points = set(self._entries) | set(other._entries)
        return all(self.value(p) <= other.value(p) for p in points)

    def translate(self, shift: RatLike) -> "QDivisor":
        """Move every point a to a - shift (the point ``shift`` lands at 0)."""
        s = rat(shift)
        return QDivisor({p - s: c for p, c in self._entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QDivisor):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{format_rat(p)}: Fraction({c.numerator}, {c.denominator})"
                          for p, c in self.items())
        return f"QDivisor({{{inner}}})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = [f"{format_rat(c)}*[{format_rat(p)}]" for p, c in self.items()]
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[dict]:
        return [{"point": format_rat(p), "coeff": format_rat(c)} for p, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "QDivisor":
        entries = {}
        for item in data:
            p = rat(item["point"])
            if p in entries:
                raise ValueError(f"duplicate point {format_rat(p)} in divisor")
            c = rat(item["coeff"])
            if c == 0:
                raise ValueError(f"zero coefficient at point {format_rat(p)}")
            entries[p] = c
        return cls(entries)


def pointwise_min(d1: QDivisor, d2: QDivisor) -> QDivisor:
    """Pointwise minimum over the union of supports (absent points count as 0)."""
    points = set(d1.support()) | set(d2.support())
    return QDivisor({p: min(d1.value(p), d2.value(p)) for p in points})


def _root_factor_str(root: Fraction, exp: int, var: str) -> str:
    if root == 0:
        base = var
    elif root > 0:
        base = f"({var} - {format_rat(root)})"
    else:
        base = f"({var} + {format_rat(-root)})"
    return base if exp == 1 else f"{base}^{exp}"


class FactoredRatFn:
    """A monic rational function prod (t - a_i)^(r_i) with r_i nonzero integers.

    The empty product is the constant 1.  All arithmetic stays in factored
    form; expansion to a coefficient list exists only for display.
    """

    __slots__ = ("_roots",)

    def __init__(self, roots: Union[Mapping, Iterable, None] = None):
        items = roots.items() if isinstance(roots, Mapping) else (roots or ())
        table: dict[Fraction, int] = {}
        for root, mult in items:
            r = rat(root)
            m = int(mult) + table.get(r, 0)
            if m:
                table[r] = m
            else:
                table.pop(r, None)
        self._roots = table

    @classmethod
    def one(cls) -> "FactoredRatFn":
        return cls()

    def roots(self) -> list[tuple[Fraction, int]]:
        return sorted(self._roots.items())

    @property
    def is_one(self) -> bool:
        return not self._roots

    @property
    def is_polynomial(self) -> bool:
        return all(m > 0 for m in self._roots.values())

    def degree(self) -> int:
        """Degree as a rational function (sum of signed multiplicities)."""
        return sum(self._roots.values())

    def divisor_of(self) -> QDivisor:
        """The integral divisor sum r_i * [a_i]."""
        return QDivisor({r: Fraction(m) for r, m in self._roots.items()})

    def __mul__(self, other: "FactoredRatFn") -> "FactoredRatFn":
        table = dict(self._roots)
        for r, m in other._roots.items():
            table[r] = table.get(r, 0) + m
        return FactoredRatFn(table)

    def __truediv__(self, other: "FactoredRatFn") -> "FactoredRatFn":
        table = dict(self._roots)
        for r, m in other._roots.items():
            table[r] = table.get(r, 0) - m
        return FactoredRatFn(table)

    def __pow__(self, n: int) -> "FactoredRatFn":
        return FactoredRatFn({r: m * n for r, m in self._roots.items()}) if n else FactoredRatFn()

    def as_poly(self) -> "FactoredPoly":
        return FactoredPoly(self._roots)

    def translate(self, shift: RatLike) -> "FactoredRatFn":
        """Substitute t -> t + shift, i.e. move the root ``shift`` to 0."""
        s = rat(shift)
        return type(self)({r - s: m for r, m in self._roots.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredRatFn):
            return NotImplemented
        return self._roots == other._roots

    def __hash__(self) -> int:
        return hash(frozenset(self._roots.items()))

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "t") -> str:
        if not self._roots:
            return "1"
        num = [(r, m) for r, m in self.roots() if m > 0]
        den = [(r, -m) for r, m in self.roots() if m < 0]
        num_s = "*".join(_root_factor_str(r, m, var) for r, m in num) or "1"
        if not den:
            return num_s
        den_s = "*".join(_root_factor_str(r, m, var) for r, m in den)
        if len(den) > 1 or den[0][1] > 1:
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __repr__(self) -> str:
        inner = ", ".join(f"{format_rat(r)}: {m}" for r, m in self.roots())
        return f"{type(self).__name__}({{{inner}}})"

    def coefficients(self) -> list[Fraction]:
        """Expanded coefficients of a polynomial, constant term first."""
        if not self.is_polynomial:
            raise ValueError("cannot expand a rational function with poles")
        coeffs = [Fraction(1)]
        for root, mult in self.roots():
            for _ in range(mult):
                coeffs = [Fraction(0)] + coeffs
                for i in range(len(coeffs) - 1):
                    coeffs[i] -= root * coeffs[i + 1]
        return coeffs

    def to_json(self) -> list[list]:
        return [[format_rat(r), m] for r, m in self.roots()]

    @classmethod
    def from_json(cls, data: Iterable) -> "FactoredRatFn":
        table = {}
        for root, mult in data:
            r = rat(root)
            if r in table:
                raise ValueError(f"duplicate root {format_rat(r)}")
            m = int(mult)
            if m == 0:
                raise ValueError(f"zero multiplicity at root {format_rat(r)}")
            table[r] = m
        return cls(table)


class FactoredPoly(FactoredRatFn):
    """A monic polynomial: a FactoredRatFn whose multiplicities are positive."""

    __slots__ = ()

    def __init__(self, roots: Union[Mapping, Iterable, None] = None):
        super().__init__(roots)
        bad = [r for r, m in self._roots.items() if m < 0]
        if bad:
            raise ValueError(
                f"negative multiplicity at root {format_rat(bad[0])}: not a polynomial")


def function_from_divisor(e: QDivisor) -> FactoredRatFn:
    """The monic rational function f with div f = e, for integral e.

    >>> print(function_from_divisor(QDivisor({0: 2, 1: -1})))
    t^2/(t - 1)
    """
    if not e.is_integral:
        raise ValueError(f"divisor is not integral: {e}")
    return FactoredRatFn({p: int(c) for p, c in e.items()})


def poly_from_divisor(e: QDivisor) -> FactoredPoly:
    """Like :func:`function_from_divisor` but requires e >= 0."""
    return function_from_divisor(e).as_poly()


def contains(d: QDivisor, f: FactoredRatFn, n: int) -> bool:
    """Degree-n membership test for the graded ring of d: div f + n*d >= 0."""
    return QDivisor.zero().pointwise_le(f.divisor_of() + n * d)


@dataclass(frozen=True)
class DpdPair:
    """The divisor pair (D+, D-) presenting a hyperbolic C*-surface.

    Validates D+ + D- <= 0 at construction; violating points are named in
    the error message.
    """

    d_plus: QDivisor
    d_minus: QDivisor

    def __post_init__(self):
        total = self.d_plus + self.d_minus
        for p in total.support():
            if total.value(p) > 0:
                raise ValueError(
                    f"D+ + D- must be <= 0 everywhere, but equals "
                    f"{format_rat(total.value(p))} at point {format_rat(p)}")

    def total(self) -> QDivisor:
        return self.d_plus + self.d_minus

    def canonical(self) -> "DpdPair":
        """The unique equivalent pair with D+ equal to its fractional part."""
        fl = self.d_plus.floor()
        return DpdPair(self.d_plus.frac(), self.d_minus + fl)

    @property
    def is_canonical(self) -> bool:
        return self.d_plus.floor().is_zero

    def translate(self, shift: RatLike) -> "DpdPair":
        return DpdPair(self.d_plus.translate(shift), self.d_minus.translate(shift))

    def to_json(self) -> dict:
        return {"d_plus": self.d_plus.to_json(), "d_minus": self.d_minus.to_json()}

    def __str__(self) -> str:
        return f"(D+ = {self.d_plus}, D- = {self.d_minus})"


def canonical_pair(pair: DpdPair) -> DpdPair:
    """Normal form of a pair: shift D+ by a principal divisor so D+ = {D+}."""
    return pair.canonical()


def pairs_equivalent(pair1: DpdPair, pair2: DpdPair) -> bool:
    """Whether two pairs present isomorphic graded rings.

    Holds exactly when the pairs differ by (div f, -div f) for a rational
    function f, i.e. when the canonical forms coincide.
    """
    return pair1.canonical() == pair2.canonical()
