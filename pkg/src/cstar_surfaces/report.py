"""Deterministic JSON and Markdown reports for the surface calculators.

All lists are sorted by point coordinate so that identical inputs always
produce byte-identical output.
"""

from __future__ import annotations

import json

from . import hyperbolic as hyp
from . import parabolic as par
from . import toric
from .divisors import DpdPair, QDivisor, format_rat


class OracleDisagreement(Exception):
    """An inline cross-check failed; this always indicates a bug."""


def _fiber_json(fs: hyp.FiberStructure) -> dict:
    return {
        "point": format_rat(fs.point),
        "kind": fs.kind,
        "orbits": [
            {
                "label": o.label,
                "type": str(o.orbit_type),
                "stabilizer_order": o.orbit_type.d,
                "tangent_weight": o.orbit_type.q,
                "multiplicity_in_fiber": o.multiplicity,
                "coeff_in_div_u": o.coeff_div_u,
            }
            for o in fs.orbits
        ],
    }


def hyperbolic_report(pair: DpdPair, oracle: bool = False) -> dict:
    can = pair.canonical()
    fixed = hyp.fixed_points(pair)
    sings = hyp.singular_points(pair)
    cl = hyp.class_group(pair)
    pic = hyp.picard_group(pair)
    eq = hyp.defining_equations(pair)
    hyper = hyp.hypersurface_case(pair)
    mods = hyp.modification_report(pair)

    report = {
        "kind": "hyperbolic",
        "classification": "hyperbolic",
        "input_pair": pair.to_json(),
        "canonical_pair": can.to_json(),
        "exceptional_locus": [format_rat(p) for p in hyp.exceptional_locus(pair)],
        "has_positive_degree_unit": hyp.has_positive_degree_unit(pair),
        "fixed_points": [format_rat(p) for p in fixed],
        "singularities": [
            {"point": format_rat(p), "type": t.render(), "d": t.d, "e": t.e}
            for p, t in sings
        ],
        "orbits": [_fiber_json(hyp.orbit_types(pair, a))
                   for a in hyp.exceptional_locus(pair)],
        "class_group": {"group": cl.group.to_json(),
                        "rendered": cl.group.render(),
                        "generators": list(cl.generator_labels)},
        "picard_group": {"group": pic.to_json(), "rendered": pic.render()},
        "factorial": hyp.is_factorial(pair),
        "canonical_divisor": [
            {"component": label, "coefficient": c}
            for label, c in hyp.canonical_divisor(pair)
        ],
        "equations": eq.to_json(),
        "hypersurface_form": (
            {"d": hyper.d, "p": hyper.p.to_json(),
             "equation": f"u^{hyper.d} * v = {hyper.p}"}
            if hyper is not None else None),
        "modifications": {
            "sigma_plus": {
                "open_embedding": mods.sigma_plus.is_open_embedding,
                "blown_up_points": [format_rat(p)
                                    for p in mods.sigma_plus.blown_up_points],
                "exceptional_orbits": list(mods.sigma_plus.exceptional_orbits),
            },
            "sigma_minus": {
                "open_embedding": mods.sigma_minus.is_open_embedding,
                "blown_up_points": [format_rat(p)
                                    for p in mods.sigma_minus.blown_up_points],
                "exceptional_orbits": list(mods.sigma_minus.exceptional_orbits),
            },
        },
    }
    if oracle:
        report["oracle"] = run_hyperbolic_oracle(pair)
    return report


def run_hyperbolic_oracle(pair: DpdPair) -> dict:
    """Inline brute-force cross-checks; raises OracleDisagreement on failure."""
    checks = []

    def check(name: str, ok: bool, detail: str = ""):
        checks.append({"check": name, "ok": bool(ok), "detail": detail})
        if not ok:
            raise OracleDisagreement(f"oracle check failed: {name} {detail}")

    for a in hyp.fixed_points(pair):
        loc = hyp.local_data(pair, a)
        cone = toric.LatticeCone((loc.e_plus, loc.m_plus),
                                 (loc.e_minus, loc.m_minus))
        expected = toric.type_of_lattice_cone(cone)
        got = hyp.singularity_at(pair, a)
        check("singularity-vs-lattice-cone", got == expected,
              f"point {format_rat(a)}: {got} vs {expected}")

    eq = hyp.defining_equations(pair)
    lhs = eq.p_plus ** eq.dp_minus * eq.p_minus ** eq.dp_plus * eq.p
    rhs = eq.q ** (eq.k * eq.dp_plus * eq.dp_minus)
    check("equation-identity", lhs == rhs, f"{lhs} vs {rhs}")

    data = hyp._exceptional_data(pair)
    cl = hyp.class_group(pair)
    if len(data.fixed) == 1:
        b = data.fixed[0]
        expected_order = b.delta
        for d in data.one_orbit:
            expected_order *= d.m_plus
        check("class-group-order", cl.group.order() == expected_order,
              f"{cl.group.order()} vs {expected_order}")
    check("factorial-iff-trivial-class-group",
          hyp.is_factorial(pair) == cl.group.is_trivial)
    check("picard-criterion",
          hyp.picard_trivial_criterion(pair) == hyp.picard_group(pair).is_trivial)
    return {"agreement": True, "checks": checks}


def parabolic_report(divisor: QDivisor, oracle: bool = False) -> dict:
    dp = par.canonical_dp(divisor)
    sings = par.parabolic_singularities(divisor)
    report = {
        "kind": "parabolic",
        "classification": "parabolic",
        "divisor": divisor.to_json(),
        "d": dp.d,
        "p": dp.p.to_json(),
        "p_factored": str(dp.p),
        "p_coefficients": [format_rat(c) for c in dp.p.coefficients()],
        "equation": f"u^{dp.d} = {dp.p} * v",
        "veronese_degree": par.veronese_degree(divisor),
        "singularities": [
            {"point": format_rat(p), "type": t.render(), "d": t.d, "e": t.e}
            for p, t in sings
        ],
    }
    if oracle:
        checks = []
        for p, t in sings:
            val = divisor.value(p)
            cone = toric.LatticeCone((1, 0), (-val.numerator, val.denominator))
            expected = toric.type_of_lattice_cone(cone)
            ok = toric.types_isomorphic(t, expected)
            checks.append({"check": "parabolic-singularity-vs-lattice-cone",
                           "ok": ok, "detail": f"point {format_rat(p)}"})
            if not ok:
                raise OracleDisagreement(
                    f"parabolic singularity at {format_rat(p)}: {t} vs {expected}")
        report["oracle"] = {"agreement": True, "checks": checks}
    return report


def toric_report(d: int, e: int, oracle: bool = False) -> dict:
    cone = toric.ConeParams(d, e)
    basis = toric.hilbert_basis(cone)
    t = toric.normalize_type(d, e)
    inverse = toric.normalize_type(d, pow(e, -1, d)) if d > 1 else t
    action = toric.quotient_action(cone)
    report = {
        "kind": "toric",
        "d": d,
        "e": e,
        "type": t.render(),
        "equivalent_type": inverse.render(),
        "algebra": f"A_{{{d},{e}}}",
        "hilbert_basis": [list(p) for p in basis],
        "hilbert_basis_size": len(basis),
        "quotient_action": action.render(),
    }
    if oracle:
        if d == 1:
            expected = 2
        else:
            expected = len(toric.hirzebruch_jung(d, d - e)) + 2
        ok = len(basis) == expected
        if not ok:
            raise OracleDisagreement(
                f"hilbert basis size {len(basis)} vs continued-fraction "
                f"count {expected}")
        report["oracle"] = {"agreement": True,
                            "checks": [{"check": "hj-generator-count",
                                        "ok": True, "detail": ""}]}
    return report


# ---------------------------------------------------------------------------
# Markdown rendering


def _md_divisor_pair(d: dict) -> str:
    def side(entries):
        if not entries:
            return "0"
        return " + ".join(f"{e['coeff']}*[{e['point']}]" for e in entries)
    return f"D+ = {side(d['d_plus'])}, D- = {side(d['d_minus'])}"


def to_markdown(report: dict) -> str:
    kind = report["kind"]
    lines = [f"# Surface analysis ({kind})", ""]
    if kind == "hyperbolic":
        lines += [
            f"- classification: {report['classification']}",
            f"- input pair: {_md_divisor_pair(report['input_pair'])}",
            f"- canonical pair: {_md_divisor_pair(report['canonical_pair'])}",
            f"- exceptional locus: {report['exceptional_locus'] or 'empty'}",
            f"- fixed points: {report['fixed_points'] or 'none'}",
            f"- units of positive degree: "
            f"{'yes' if report['has_positive_degree_unit'] else 'no'}",
            "",
            "## Singularities", "",
        ]
        if report["singularities"]:
            for s in report["singularities"]:
                lines.append(f"- {s['type']} at point {s['point']}")
        else:
            lines.append("- smooth")
        lines += ["", "## Orbits", ""]
        for fiber in report["orbits"]:
            lines.append(f"- over {fiber['point']}: {fiber['kind']}")
            for o in fiber["orbits"]:
                lines.append(
                    f"  - {o['label']}: type {o['type']}, multiplicity "
                    f"{o['multiplicity_in_fiber']} in the fiber, coefficient "
                    f"{o['coeff_in_div_u']} in div u")
        lines += [
            "",
            "## Groups",
            "",
            f"- Cl = {report['class_group']['rendered']} "
            f"(generators: {', '.join(report['class_group']['generators']) or 'none'})",
            f"- Pic = {report['picard_group']['rendered']}",
            f"- factorial: {'yes' if report['factorial'] else 'no'}",
            "",
            "## Canonical divisor",
            "",
        ]
        if report["canonical_divisor"]:
            terms = " + ".join(f"{c['coefficient']}*[{c['component']}]"
                               for c in report["canonical_divisor"])
            lines.append(f"- K = {terms}")
        else:
            lines.append("- K = 0")
        lines += ["", "## Equations", ""]
        for eqn in report["equations"]["equations"]:
            lines.append(f"- {eqn}")
        if report["equations"]["hypersurface_equation"]:
            lines.append(
                f"- hypersurface form: {report['equations']['hypersurface_equation']}")
        if report["equations"]["unit_note"]:
            lines.append(f"- {report['equations']['unit_note']}")
        if report.get("hypersurface_form"):
            lines.append(
                f"- integral D+ form: {report['hypersurface_form']['equation']}")
        mods = report["modifications"]
        lines += ["", "## Modifications", ""]
        for name in ("sigma_plus", "sigma_minus"):
            side = mods[name]
            if side["open_embedding"]:
                lines.append(f"- {name}: open embedding")
            else:
                lines.append(
                    f"- {name}: blows up over {side['blown_up_points']}, "
                    f"exceptional orbits {side['exceptional_orbits']}")
    elif kind == "parabolic":
        lines += [
            f"- classification: parabolic",
            f"- d = {report['d']}, P = {report['p_factored']}",
            f"- equation: {report['equation']}",
            f"- expanded coefficients (constant first): "
            f"{report['p_coefficients']}",
            f"- Veronese degree: {report['veronese_degree']}",
            "",
            "## Singularities", "",
        ]
        if report["singularities"]:
            for s in report["singularities"]:
                lines.append(f"- {s['type']} at point {s['point']}")
        else:
            lines.append("- smooth")
    elif kind == "toric":
        lines += [
            f"- algebra: {report['algebra']}",
            f"- type: {report['type']} (isomorphic to {report['equivalent_type']})",
            f"- quotient: {report['quotient_action']}",
            f"- Hilbert basis ({report['hilbert_basis_size']} elements): "
            f"{report['hilbert_basis']}",
        ]
    if "oracle" in report:
        lines += ["", f"- oracle cross-checks: "
                      f"{len(report['oracle']['checks'])} passed"]
    return "\n".join(lines) + "\n"


def to_json_str(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"
