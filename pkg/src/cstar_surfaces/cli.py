"""Command-line front end.

Reads one surface description per invocation (JSON, or TOML for files
ending in .toml) and emits a deterministic report.

Input documents::

    {"kind": "hyperbolic",
     "d_plus":  [{"point": "0", "coeff": "-1/2"}],
     "d_minus": [{"point": "0", "coeff": "-1/3"}]}

    {"kind": "parabolic", "divisor": [{"point": "0", "coeff": "-2/3"}]}

    {"kind": "toric", "d": 5, "e": 2}

    {"kind": "hypersurface", "d": 2, "p": [["0", 3]]}

Polynomials are entered as root lists: ``[["0", 3], ["1", 4]]`` means
t^3 (t-1)^4.  Exit codes: 0 success, 1 input error, 2 internal invariant
violation (an oracle disagreement — always a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

try:
    import tomllib
except ModuleNotFoundError:  # tomllib landed in 3.11; tomli is API-identical
    import tomli as tomllib

from . import hyperbolic as hyp
from . import report as rep
from .divisors import DpdPair, FactoredPoly, FactoredRatFn, QDivisor
from .report import OracleDisagreement

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVARIANT = 2


class InputError(Exception):
    pass


def _load_document(path: str) -> dict:
    try:
        if path == "-":
            return json.loads(sys.stdin.read())
        if path.endswith(".toml"):
            with open(path, "rb") as fh:
                return tomllib.load(fh)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise InputError(f"malformed document {path}: {exc}") from exc


def _divisor(doc, field: str) -> QDivisor:
    data = doc.get(field)
    if data is None:
        raise InputError(f"missing field '{field}'")
    try:
        return QDivisor.from_json(data)
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise InputError(f"field '{field}': {exc}") from exc


def _poly(data) -> FactoredPoly:
    try:
        return FactoredRatFn.from_json(data).as_poly()
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"malformed polynomial root list: {exc}") from exc


def _pair_from_document(doc: dict) -> DpdPair:
    kind = doc.get("kind")
    if kind == "hyperbolic":
        d_plus = _divisor(doc, "d_plus")
        d_minus = _divisor(doc, "d_minus")
        try:
            return DpdPair(d_plus, d_minus)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if kind == "hypersurface":
        d = doc.get("d")
        if not isinstance(d, int) or d < 1:
            raise InputError("field 'd' must be a positive integer")
        p = _poly(doc.get("p", []))
        div_p = p.divisor_of()
        # D+ = 0, D- = -div(P)/d presents the normalization of u^d v = P.
        return DpdPair(QDivisor.zero(), div_p * Fraction(-1, d))
    raise InputError(
        f"expected kind 'hyperbolic' or 'hypersurface', got {kind!r}")


def _build_report(doc: dict, oracle: bool) -> dict:
    kind = doc.get("kind")
    if kind in ("hyperbolic", "hypersurface"):
        return rep.hyperbolic_report(_pair_from_document(doc), oracle=oracle)
    if kind == "parabolic":
        return rep.parabolic_report(_divisor(doc, "divisor"), oracle=oracle)
    if kind == "toric":
        d, e = doc.get("d"), doc.get("e")
        if not isinstance(d, int) or not isinstance(e, int):
            raise InputError("toric documents need integer fields 'd' and 'e'")
        try:
            return rep.toric_report(d, e, oracle=oracle)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    raise InputError(f"unknown kind {kind!r}")


def _emit(report: dict, fmt: str) -> None:
    if fmt == "markdown":
        sys.stdout.write(rep.to_markdown(report))
    else:
        sys.stdout.write(rep.to_json_str(report))


def cmd_analyze(args) -> int:
    doc = _load_document(args.input)
    if args.canonical:
        if doc.get("kind") not in ("hyperbolic", "hypersurface"):
            raise InputError("--canonical applies to divisor-pair surfaces")
        can = _pair_from_document(doc).canonical()
        if args.format == "markdown":
            sys.stdout.write(f"canonical pair: {can}\n")
        else:
            sys.stdout.write(json.dumps(can.to_json(), indent=2) + "\n")
        return EXIT_OK
    _emit(_build_report(doc, args.oracle), args.format)
    return EXIT_OK


def cmd_equations(args) -> int:
    doc = _load_document(args.input)
    pair = _pair_from_document(doc)
    eq = hyp.defining_equations(pair)
    if args.oracle:
        lhs = eq.p_plus ** eq.dp_minus * eq.p_minus ** eq.dp_plus * eq.p
        rhs = eq.q ** (eq.k * eq.dp_plus * eq.dp_minus)
        if lhs != rhs:
            raise OracleDisagreement(f"equation identity fails: {lhs} vs {rhs}")
    if args.format == "markdown":
        lines = ["# Defining equations", ""]
        lines += [f"- {e}" for e in eq.equations]
        if eq.hypersurface_equation:
            lines.append(f"- hypersurface form: {eq.hypersurface_equation}")
        if eq.unit_note:
            lines.append(f"- {eq.unit_note}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(json.dumps(eq.to_json(), indent=2) + "\n")
    return EXIT_OK


def cmd_cover(args) -> int:
    doc = _load_document(args.input)
    pair = _pair_from_document(doc)
    try:
        result = hyp.cyclic_cover(pair, args.b, args.d)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "markdown":
        sys.stdout.write(
            f"# Cyclic cover (b = {args.b}, d = {args.d})\n\n"
            f"- base change: degree {result.base_change_degree}, "
            f"coordinate {result.coordinate}\n"
            f"- new pair: {result.new_pair}\n")
    else:
        sys.stdout.write(json.dumps(result.to_json(), indent=2) + "\n")
    return EXIT_OK


def _generators(doc, field: str):
    data = doc.get(field)
    if not isinstance(data, list) or not data:
        raise InputError(f"field '{field}' must be a non-empty list of "
                         f"[root-list, degree] generators")
    out = []
    for item in data:
        try:
            roots, degree = item
        except (TypeError, ValueError) as exc:
            raise InputError(f"field '{field}': each generator is a "
                             f"[root-list, degree] pair") from exc
        if not isinstance(degree, int) or degree < 1:
            raise InputError(f"field '{field}': degrees must be positive integers")
        try:
            fn = FactoredRatFn.from_json(roots)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise InputError(f"field '{field}': {exc}") from exc
        out.append((fn, degree))
    return out


def cmd_convert(args) -> int:
    doc = _load_document(args.input)
    neg = _generators(doc, "neg")
    pos = _generators(doc, "pos")
    try:
        pair = hyp.dpd_from_generators(neg, pos)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = {"pair": pair.to_json(), "canonical_pair": pair.canonical().to_json()}
    if args.format == "markdown":
        sys.stdout.write(f"# Recovered divisor pair\n\n- pair: {pair}\n"
                         f"- canonical: {pair.canonical()}\n")
    else:
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK


def cmd_toric(args) -> int:
    try:
        report = rep.toric_report(args.d, args.e, oracle=args.oracle)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(report, args.format)
    return EXIT_OK


def _add_common(parser, with_input=True):
    if with_input:
        parser.add_argument("input", help="JSON (or .toml) document, '-' for stdin")
    parser.add_argument("--format", choices=("json", "markdown"), default="json")
    parser.add_argument("--oracle", action="store_true",
                        help="run brute-force cross-checks inline")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cstar-surfaces",
        description="Exact invariants of affine surfaces with C*-actions "
                    "presented by divisor data on the affine line.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis report")
    _add_common(p)
    p.add_argument("--canonical", action="store_true",
                   help="print only the canonical divisor pair")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("equations", help="defining equations of the surface ring")
    _add_common(p)
    p.set_defaults(func=cmd_equations)

    p = sub.add_parser("cover", help="normalize in the d-th root of t*u^b")
    _add_common(p)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("convert",
                       help="recover a divisor pair from ring generators")
    _add_common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("toric", help="toric surface report for parameters (d, e)")
    _add_common(p, with_input=False)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_toric)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleDisagreement as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
