"""The calculator for hyperbolic C*-surfaces presented by divisor pairs.

Everything about the surface of a pair (D+, D-) with D+ + D- <= 0 on the
t-line is read off from the local data

    D+(a) = -e+/m+  and  D-(a) = e-/m-   (m+ > 0, m- < 0, both coprime)

at the finitely many exceptional points: fixed points lie over the points
with D+(a) + D-(a) < 0, singularity types come from a 2x2 determinant,
orbit stabilizers from the denominators, and the divisor class group from
an explicit integer presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .abelian import FgAbelianGroup, IntMatrix, group_from_presentation
from .divisors import (DpdPair, FactoredPoly, FactoredRatFn, Point, QDivisor,
                       format_rat, poly_from_divisor)
from .parabolic import DpPair
from .toric import QuotSingType, normalize_type
from .toric import _ext_gcd  # shared Bezout helper


# ---------------------------------------------------------------------------
# local data at a point


@dataclass(frozen=True)
class LocalData:
    """The pair of reduced fractions describing (D+, D-) at one point.

    Conventions: m_plus > 0, m_minus < 0; a vanishing coefficient is
    recorded as (0, 1) on the plus side and (0, -1) on the minus side.
    """

    point: Point
    e_plus: int
    m_plus: int
    e_minus: int
    m_minus: int

    @property
    def delta(self) -> int:
        """The index -det[[e+, e-], [m+, m-]]; positive iff the fiber
        carries a fixed point, zero iff D+(a) + D-(a) = 0."""
        return -(self.e_plus * self.m_minus - self.e_minus * self.m_plus)


def local_data(pair: DpdPair, a: Point) -> LocalData:
    a = Fraction(a)
    plus = pair.d_plus.value(a)   # equals -e+/m+
    minus = pair.d_minus.value(a)  # equals e-/m-
    if plus == 0:
        e_p, m_p = 0, 1
    else:
        e_p, m_p = -plus.numerator, plus.denominator
    if minus == 0:
        e_m, m_m = 0, -1
    else:
        e_m, m_m = -minus.numerator, -minus.denominator
    data = LocalData(a, e_p, m_p, e_m, m_m)
    # Sign sanity: D+(a) + D-(a) = delta / (m+ m-) <= 0 forces delta >= 0.
    assert plus + minus == Fraction(data.delta, m_p * m_m)
    assert data.delta >= 0
    return data


def fixed_points(pair: DpdPair) -> list[Point]:
    """Images on the base line of the fixed points: where D+ + D- < 0."""
    total = pair.total()
    return sorted(p for p in total.support() if total.value(p) < 0)


def _bezout_for_plus(e_plus: int, m_plus: int) -> tuple[int, int]:
    """(p, q) with p*m+ - q*e+ = 1, canonicalized to 0 <= q < m+."""
    g, p, t = _ext_gcd(m_plus, -e_plus)  # p*m+ + t*(-e+) = 1
    assert g == 1
    q = t
    # (p, q) -> (p + k*e+, q + k*m+) preserves the identity.
    k = -(q // m_plus)
    return p + k * e_plus, q + k * m_plus


def singularity_at(pair: DpdPair, a: Point) -> QuotSingType:
    """Cyclic quotient type of the fixed point over a.

    The index is delta = -det[[e+, e-], [m+, m-]] and the weight is
    det[[p, e-], [q, m-]] mod delta for any (p, q) with det[[p, e+],
    [q, m+]] = 1; delta = 1 marks a smooth fixed point.
    """
    a = Fraction(a)
    if a not in fixed_points(pair):
        raise ValueError(
            f"no fixed point over {format_rat(a)}: D+ + D- vanishes there")
    loc = local_data(pair, a)
    p, q = _bezout_for_plus(loc.e_plus, loc.m_plus)
    e = p * loc.m_minus - q * loc.e_minus
    return normalize_type(loc.delta, e)


def singular_points(pair: DpdPair) -> list[tuple[Point, QuotSingType]]:
    """Fixed points whose quotient type is nontrivial (index > 1)."""
    out = []
    for a in fixed_points(pair):
        t = singularity_at(pair, a)
        if not t.is_smooth:
            out.append((a, t))
    return out


# ---------------------------------------------------------------------------
# orbits and fibers


@dataclass(frozen=True)
class OrbitType:
    """Stabilizer order and tangent weight (d, q) of a one-dimensional orbit."""

    d: int
    q: int

    @property
    def is_principal(self) -> bool:
        return self.d == 1

    def __str__(self) -> str:
        return "principal" if self.is_principal else f"({self.d},{self.q})"


@dataclass(frozen=True)
class OrbitInfo:
    label: str
    orbit_type: OrbitType
    multiplicity: int      # coefficient in the fiber pullback pi^*(a)
    coeff_div_u: int       # coefficient in div u


@dataclass(frozen=True)
class FiberStructure:
    point: Point
    kind: str  # "principal" | "one-orbit" | "two-orbits-with-fixed-point"
    orbits: tuple[OrbitInfo, ...]


def _q_plus(e_plus: int, m_plus: int) -> int:
    """Least q >= 0 with q*e+ = -1 mod m+."""
    if m_plus == 1:
        return 0
    return (-pow(e_plus, -1, m_plus)) % m_plus


def _q_minus(e_minus: int, m_minus: int) -> int:
    """Least q >= 0 with q*e- = 1 mod |m-|."""
    n = -m_minus
    if n == 1:
        return 0
    return pow(e_minus, -1, n) % n


def orbit_types(pair: DpdPair, a: Point) -> FiberStructure:
    """Structure of the fiber over a: orbit types, multiplicities in the
    fiber pullback and coefficients in div u."""
    a = Fraction(a)
    loc = local_data(pair, a)
    plus, minus = pair.d_plus.value(a), pair.d_minus.value(a)
    if plus == 0 and minus == 0:
        return FiberStructure(a, "principal", ())
    if plus + minus == 0:
        q = _q_plus(loc.e_plus, loc.m_plus)
        orbit = OrbitInfo(f"O({format_rat(a)})", OrbitType(loc.m_plus, q),
                          loc.m_plus, -loc.e_plus)
        return FiberStructure(a, "one-orbit", (orbit,))
    o_plus = OrbitInfo(f"O+({format_rat(a)})",
                       OrbitType(loc.m_plus, _q_plus(loc.e_plus, loc.m_plus)),
                       loc.m_plus, -loc.e_plus)
    o_minus = OrbitInfo(f"O-({format_rat(a)})",
                        OrbitType(-loc.m_minus, _q_minus(loc.e_minus, loc.m_minus)),
                        -loc.m_minus, loc.e_minus)
    return FiberStructure(a, "two-orbits-with-fixed-point", (o_plus, o_minus))


def exceptional_locus(pair: DpdPair) -> list[Point]:
    """Points of the base over which the fiber is not a principal orbit."""
    return sorted(set(pair.d_plus.support()) | set(pair.d_minus.support()))


def has_positive_degree_unit(pair: DpdPair) -> bool:
    """Units of positive degree exist iff D- = -D+ (principality of the
    integral multiple is automatic on the affine line)."""
    return pair.d_minus == -pair.d_plus


# ---------------------------------------------------------------------------
# class group, Picard group, factoriality, canonical divisor


@dataclass(frozen=True)
class _ExceptionalData:
    """Local data split into one-orbit points (sum 0, value nonzero) and
    fixed points (sum < 0), computed on the canonical pair."""

    one_orbit: tuple[LocalData, ...]   # the a_i
    fixed: tuple[LocalData, ...]       # the b_j


def _exceptional_data(pair: DpdPair) -> _ExceptionalData:
    can = pair.canonical()
    ones, fixeds = [], []
    for a in exceptional_locus(can):
        loc = local_data(can, a)
        total = can.d_plus.value(a) + can.d_minus.value(a)
        if total < 0:
            fixeds.append(loc)
        elif can.d_plus.value(a) != 0:
            ones.append(loc)
    return _ExceptionalData(tuple(ones), tuple(fixeds))


@dataclass(frozen=True)
class GroupPresentation:
    group: FgAbelianGroup
    generator_labels: tuple[str, ...]
    relations: IntMatrix = field(repr=False, compare=False, default=None)


def class_group(pair: DpdPair) -> GroupPresentation:
    """Divisor class group from the fiber-component presentation.

    Generators are the one-orbit classes O(a) and the two orbit closures
    O+(b), O-(b) over each fixed point; relations say that fiber pullbacks
    and div u are principal.
    """
    data = _exceptional_data(pair)
    k, l = len(data.one_orbit), len(data.fixed)
    labels = tuple(f"O({format_rat(d.point)})" for d in data.one_orbit) + tuple(
        f"O{s}({format_rat(d.point)})" for d in data.fixed for s in ("+", "-"))
    n = k + 2 * l
    rows = []
    for i, d in enumerate(data.one_orbit):
        row = [0] * n
        row[i] = d.m_plus
        rows.append(row)
    for j, d in enumerate(data.fixed):
        row = [0] * n
        row[k + 2 * j] = d.m_plus
        row[k + 2 * j + 1] = -d.m_minus
        rows.append(row)
    div_u = [d.e_plus for d in data.one_orbit]
    for d in data.fixed:
        div_u.extend([d.e_plus, -d.e_minus])
    rows.append(div_u)
    relations = IntMatrix.from_rows(rows, n)
    return GroupPresentation(group_from_presentation(n, relations), labels, relations)


def picard_group(pair: DpdPair) -> FgAbelianGroup:
    """Picard group: the kernel of the localization map on the class group,
    generated by the O(a) and the combinations e+*O+(b) - e-*O-(b)."""
    data = _exceptional_data(pair)
    k, l = len(data.one_orbit), len(data.fixed)
    n = k + l
    rows = []
    for i, d in enumerate(data.one_orbit):
        row = [0] * n
        row[i] = d.m_plus
        rows.append(row)
    rows.append([d.e_plus for d in data.one_orbit] + [1] * l)
    return group_from_presentation(n, IntMatrix.from_rows(rows, n))


def picard_trivial_criterion(pair: DpdPair) -> bool:
    """Closed-form vanishing test for the Picard group: factoriality case
    (i), or a single fixed fiber with all one-orbit multiplicities 1."""
    data = _exceptional_data(pair)
    l = len(data.fixed)
    ms = [d.m_plus for d in data.one_orbit]
    case_i = l == 0 and all(
        gcd(ms[i], ms[j]) == 1 for i in range(len(ms)) for j in range(i + 1, len(ms)))
    case_l1 = l == 1 and all(m == 1 for m in ms)
    return case_i or case_l1


def is_factorial(pair: DpdPair) -> bool:
    """Unique factorization test via the closed-form criterion:
    either no fixed points and pairwise coprime one-orbit multiplicities,
    or one fixed fiber, trivial one-orbit multiplicities and index 1."""
    data = _exceptional_data(pair)
    l = len(data.fixed)
    ms = [d.m_plus for d in data.one_orbit]
    if l == 0:
        return all(gcd(ms[i], ms[j]) == 1
                   for i in range(len(ms)) for j in range(i + 1, len(ms)))
    if l == 1:
        b = data.fixed[0]
        return all(m == 1 for m in ms) and b.delta == 1
    return False


def canonical_divisor(pair: DpdPair) -> list[tuple[str, int]]:
    """Coefficients of the canonical class on the exceptional fiber
    components (the pullback from the affine line is principal)."""
    data = _exceptional_data(pair)
    out = []
    for d in data.one_orbit:
        out.append((f"O({format_rat(d.point)})", d.m_plus - 1))
    for d in data.fixed:
        out.append((f"O+({format_rat(d.point)})", d.m_plus - 1))
        out.append((f"O-({format_rat(d.point)})", -d.m_minus - 1))
    return out


# ---------------------------------------------------------------------------
# defining equations


def _pow_str(base: str, n: int) -> str:
    return base if n == 1 else f"{base}^{n}"


@dataclass(frozen=True)
class EquationData:
    """Generators-and-relations data of the surface ring.

    Computed on the canonical pair: d_plus, d_minus are the denominators of
    D+ and D-, k their gcd, and the five polynomials satisfy
    P+^(d'-) * P-^(d'+) * P = Q^(k d'+ d'-) exactly.
    """

    d_plus: int
    d_minus: int
    k: int
    dp_plus: int   # d'_+ = d_plus / k
    dp_minus: int  # d'_- = d_minus / k
    p_plus: FactoredPoly
    p_minus: FactoredPoly
    q: FactoredPoly
    p: FactoredPoly
    q_plus: FactoredPoly
    equations: tuple[str, ...]
    hypersurface_equation: Optional[str]
    unit_note: Optional[str]

    def to_json(self) -> dict:
        return {
            "d_plus": self.d_plus, "d_minus": self.d_minus, "k": self.k,
            "p_plus": self.p_plus.to_json(), "p_minus": self.p_minus.to_json(),
            "q": self.q.to_json(), "p": self.p.to_json(),
            "q_plus": self.q_plus.to_json(),
            "equations": list(self.equations),
            "hypersurface_equation": self.hypersurface_equation,
            "unit_note": self.unit_note,
        }


def defining_equations(pair: DpdPair) -> EquationData:
    """Equations of the surface as a normalization of a three-relation ring.

    On the canonical pair: div P+ = d+ * {D+}, div P- = d- * {D-},
    div Q = -floor(D+) - floor(D-), and
    P = Q^(k d'+ d'-) / (P+^(d'-) * P-^(d'+)),  Q+ = Q^(d+) / P+.
    A single hypersurface equation is reported when k = 1 and no unit of
    positive degree exists.
    """
    can = pair.canonical()
    d_p = can.d_plus.denominator()
    d_m = can.d_minus.denominator()
    k = gcd(d_p, d_m)
    dp_p, dp_m = d_p // k, d_m // k
    p_plus = poly_from_divisor(d_p * can.d_plus.frac())
    p_minus = poly_from_divisor(d_m * can.d_minus.frac())
    q = poly_from_divisor(-(can.d_plus.floor() + can.d_minus.floor()))
    p = (q ** (k * dp_p * dp_m) / (p_plus ** dp_m * p_minus ** dp_p)).as_poly()
    q_plus = (q ** d_p / p_plus).as_poly()

    equations = (
        f"{_pow_str('u-', d_m)} = {p_minus} * v-",
        f"{_pow_str('v+', dp_m)} * {_pow_str('v-', dp_p)} = {p}",
        f"v+ * {_pow_str('u-', d_p)} = {q_plus}",
    )
    unit_note = None
    hyper = None
    if has_positive_degree_unit(can):
        d = can.d_plus.denominator()
        unit_note = (f"invertible element of degree {d}: "
                     f"the ring contains a unit u^{d} up to a rational function")
    elif k == 1:
        hyper = f"{_pow_str('v+', d_m)} * {_pow_str('v-', d_p)} = {p}"
    return EquationData(d_p, d_m, k, dp_p, dp_m, p_plus, p_minus, q, p, q_plus,
                        equations, hyper, unit_note)


def hypersurface_case(pair: DpdPair) -> Optional[DpPair]:
    """When D+ is integral the surface is the normalization of
    u^d v = P(t) with D+ + D- = -div(P)/d; returns None otherwise."""
    if not pair.d_plus.frac().is_zero:
        return None
    total = pair.total()
    d = total.denominator()
    return DpPair(d, poly_from_divisor(-d * total))


# ---------------------------------------------------------------------------
# recovering a pair from generators / equations


def dpd_from_generators(neg: list[tuple[FactoredRatFn, int]],
                        pos: list[tuple[FactoredRatFn, int]]) -> DpdPair:
    """Divisor pair of the normalization of the ring generated by
    h_i * u^(-n_i) and f_j * u^(m_j): D- = -min div(h)/n, D+ = -min div(f)/m.

    Raises if the resulting pair violates D+ + D- <= 0 (the generated ring
    then has extra degree-0 elements).
    """
    from .parabolic import dpd_from_generators_parabolic
    if not neg or not pos:
        raise ValueError("both generator lists must be non-empty")
    d_minus = dpd_from_generators_parabolic(neg)
    d_plus = dpd_from_generators_parabolic(pos)
    return DpdPair(d_plus, d_minus)


def dpd_from_coprime_hypersurface(d_plus: int, d_minus: int,
                                  p: FactoredPoly) -> DpdPair:
    """Divisor pair of the normalization of v+^(d-) v-^(d+) = P(t) for
    coprime exponents, via a Bezout choice (well-defined up to equivalence)."""
    if d_plus < 1 or d_minus < 1:
        raise ValueError("degrees must be positive")
    if gcd(d_plus, d_minus) != 1:
        raise ValueError(f"degrees must be coprime, got ({d_plus}, {d_minus})")
    g, qq, pp = _ext_gcd(d_plus, -d_minus)  # qq*d+ - pp*d- = 1
    assert g == 1
    div_p = p.divisor_of()
    return DpdPair(div_p * Fraction(pp, d_plus), div_p * Fraction(-qq, d_minus))


# ---------------------------------------------------------------------------
# cyclic covers and quotient presentations


@dataclass(frozen=True)
class CoverResult:
    """Result of adjoining a d-th root of t*u^b: the base changes by
    s -> s^k with k = gcd(b, d), and the new pair lives on the s-line."""

    base_change_degree: int
    new_pair: DpdPair
    coordinate: str

    def to_json(self) -> dict:
        return {"base_change_degree": self.base_change_degree,
                "new_pair": self.new_pair.to_json(),
                "coordinate": self.coordinate}


def cyclic_cover(pair: DpdPair, b: int, d: int) -> CoverResult:
    """Normalization in the field extension by the d-th root of t*u^b.

    New divisors are (k/d) * (p*(D±) ± beta*[0]) where k = gcd(b, d),
    p is the base change s -> s^k and beta is the least non-negative
    solution of beta*b = k mod d.  When k > 1 the supports must lie in
    {0}, else the pulled-back points leave the rational line.
    """
    if d < 1 or b < 0:
        raise ValueError("need d >= 1 and b >= 0")
    k = gcd(b, d)
    if b == 0:
        k = d
    if k > 1:
        bad = [p for p in exceptional_locus(pair) if p != 0]
        if bad:
            raise ValueError(
                f"base change of degree {k} needs supports in {{0}}; "
                f"point {format_rat(bad[0])} would pull back to an "
                f"irrational point")
    # beta*b = k mod d; reduce by k to a unit inversion.
    dp = d // k
    if dp == 1:
        beta = 0
    else:
        beta = pow((b // k) % dp, -1, dp)

    def transform(div: QDivisor, sign: int) -> QDivisor:
        if k > 1:
            pulled = QDivisor.single(0, k * div.value(0)) if div.value(0) else QDivisor.zero()
        else:
            pulled = div
        return (pulled + QDivisor.single(0, sign * beta)) * Fraction(k, d)

    new_pair = DpdPair(transform(pair.d_plus, +1),
                       transform(pair.d_minus, -1)).canonical()
    return CoverResult(k, new_pair, f"s with s^{k} = t")


@dataclass(frozen=True)
class QuotientPresentation:
    """Presentation of the surface as a cyclic quotient of a hypersurface
    normalization u^k v = P(s), with the order-d group acting by
    s -> zeta s, u -> zeta^e u, v -> v."""

    k: int
    p: FactoredPoly
    d: int
    e: int
    translation: Fraction  # applied to move the marked point to 0

    def action_str(self) -> str:
        if self.d == 1:
            return "trivial group"
        return (f"Z_{self.d}: s -> zeta*s, u -> zeta^{self.e}*u, v -> v")

    def to_json(self) -> dict:
        return {"k": self.k, "p": self.p.to_json(), "d": self.d, "e": self.e,
                "action": self.action_str(),
                "translation": format_rat(self.translation)}


def quotient_presentation(pair: DpdPair) -> Optional[QuotientPresentation]:
    """Cyclic-quotient form when {-D+} is supported at (at most) one point.

    Requires D- <= 0 after translating the marked point to the origin;
    the branched cover has P(s) = Q(s^d) * s^(k e) with div Q = -k D-.
    Returns None when inapplicable, including when Q(s^d) would need
    irrational roots (d > 1 with Q supported off the origin).
    """
    frac_neg = (-pair.d_plus).frac()
    support = frac_neg.support()
    if len(support) > 1:
        return None
    if support:
        a = support[0]
        val = frac_neg.value(a)
        e, d = val.numerator, val.denominator
    else:
        a, e, d = Fraction(0), 0, 1
    shifted = pair.translate(a)
    d_minus = shifted.d_minus
    if not d_minus.pointwise_le(QDivisor.zero()):
        return None
    k = d_minus.denominator()
    q = poly_from_divisor(-k * d_minus)
    if d > 1 and any(r != 0 for r, _ in q.roots()):
        return None  # Q(s^d) would have irrational roots
    mult0 = dict(q.roots()).get(Fraction(0), 0)
    if d > 1:
        roots = {Fraction(0): d * mult0 + k * e}
    else:
        roots = dict(q.roots())
        roots[Fraction(0)] = mult0 + k * e
    p = FactoredPoly({r: m for r, m in roots.items() if m})
    return QuotientPresentation(k, p, d, e, Fraction(a))


# ---------------------------------------------------------------------------
# birational modifications


@dataclass(frozen=True)
class ModificationSide:
    blown_up_points: tuple[Point, ...]
    exceptional_orbits: tuple[str, ...]

    @property
    def is_open_embedding(self) -> bool:
        return not self.blown_up_points


@dataclass(frozen=True)
class ModificationReport:
    """How the surface maps to its positive and negative halves: each map
    blows up the fixed points and its exceptional set consists of the
    opposite-sign orbits over them; with no fixed points both maps are
    open embeddings."""

    sigma_plus: ModificationSide
    sigma_minus: ModificationSide


def modification_report(pair: DpdPair) -> ModificationReport:
    pts = tuple(fixed_points(pair))
    plus = ModificationSide(pts, tuple(f"O-({format_rat(p)})" for p in pts))
    minus = ModificationSide(pts, tuple(f"O+({format_rat(p)})" for p in pts))
    return ModificationReport(plus, minus)
