"""Command-line front end.

Commands: analyze, primitive, normal, norm-one, pell, density-probe.  Output
is a single document on stdout, as text or (--json) as JSON with
schema_version "1".  Every rational in JSON is an exact "p/q" string and
elements are coefficient arrays, so certificates can be re-verified from the
document alone.  Identical arguments and seed produce byte-identical JSON
except for the diagnostics.timings block.

Exit codes: 0 success; 2 invalid input (syntax error, reducible polynomial,
square discriminant, bad sample); 3 not Galois where the command requires it;
4 search budget exhausted (partial results are still emitted); 5 internal cap
hit (degree or p-adic precision).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .criteria import is_separable_ext, no_low_degree_relation
from .errors import (
    BoundTooLargeForModulus,
    ConstantPolynomial,
    DegreeCapExceeded,
    EmptyInput,
    FieldlabError,
    HeightCapExceeded,
    InsufficientSample,
    NoSplitPrimeFound,
    NotAField,
    NotGalois,
    NotSquarefree,
    PolySyntaxError,
    PrecisionCapExceeded,
    RationalRoot,
    TrivialExtension,
    ZeroDivisor,
    ZeroPolynomial,
)
from .galois import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_PRIME_BOUND,
    automorphisms_with_diagnostics,
)
from .numberfield import NumberField, make_field
from .parsing import format_elem, format_poly, parse_poly
from .polynomials import UPoly
from .search import (
    DEFAULT_MAX_HEIGHT,
    SearchConfig,
    WitnessedElement,
    norm_one_normal,
    norm_one_primitive,
    pell_solutions,
    search_normal,
    search_primitive,
)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NOT_GALOIS = 3
EXIT_BUDGET = 4
EXIT_INTERNAL_CAP = 5

_INVALID_INPUT_ERRORS = (
    PolySyntaxError,
    EmptyInput,
    ZeroPolynomial,
    ConstantPolynomial,
    NotSquarefree,
    RationalRoot,
    NotAField,
    TrivialExtension,
    InsufficientSample,
    ZeroDivisor,
    BoundTooLargeForModulus,
    ValueError,
)
_INTERNAL_CAP_ERRORS = (DegreeCapExceeded, PrecisionCapExceeded, NoSplitPrimeFound)


def rat_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _elem_json(e) -> list[str]:
    return [rat_str(c) for c in e.coeffs]


def _poly_json(p: UPoly) -> list[str]:
    return [rat_str(c) for c in p.coeffs]


def _witness_json(w: WitnessedElement) -> dict:
    return {
        "element": _elem_json(w.a),
        "per_h": [
            {
                "h": format_poly(p.h),
                "value": _elem_json(p.value),
                "min_poly": _poly_json(p.min_poly),
                "normal_det": None if p.normal_det is None else _elem_json(p.normal_det),
            }
            for p in w.per_h
        ],
        "norm_value": None if w.norm_value is None else rat_str(w.norm_value),
    }


def _field_json(E: NumberField) -> dict:
    return {
        "polynomial": format_poly(E.minpoly),
        "coefficients": _poly_json(E.minpoly),
        "degree": E.degree,
    }


class _Run:
    """Mutable bag for one invocation: resolved options plus diagnostics."""

    def __init__(self, args):
        self.args = args
        self.seed = _resolve(args.seed, "FIELDLAB_SEED", 0)
        self.max_height = _resolve(args.max_height, "FIELDLAB_MAX_HEIGHT", DEFAULT_MAX_HEIGHT)
        self.degree_cap = _resolve(args.degree_cap, "FIELDLAB_DEGREE_CAP", DEFAULT_DEGREE_CAP)
        self.prime_bound = args.prime_bound if args.prime_bound is not None else DEFAULT_PRIME_BOUND
        self.mode = "randomized" if args.randomized else "deterministic"
        self.threads = args.threads
        self.prime = None
        self.precision = None
        self.budget_exhausted = False

    def document(self, command: str, field: dict | None, results) -> dict:
        return {
            "schema_version": "1",
            "command": command,
            "field": field,
            "results": results,
            "diagnostics": {
                "prime": self.prime,
                "precision": self.precision,
                "seed": self.seed,
                "mode": self.mode,
                "budget_exhausted": self.budget_exhausted,
                "timings": {"total_ms": None},  # filled just before printing
            },
        }


def _resolve(flag_value, env_name: str, default: int) -> int:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(env_name)
    if raw is None:
        return default
    return int(raw)


def _parse_set(raw: str) -> tuple[UPoly, ...]:
    return tuple(parse_poly(part) for part in raw.split(";"))


def _cmd_analyze(run: _Run) -> tuple[dict, int]:
    E = make_field(parse_poly(run.args.polynomial))
    auts, data = automorphisms_with_diagnostics(
        E, degree_cap=run.degree_cap, prime_bound=run.prime_bound
    )
    run.prime, run.precision = data.p, data.precision
    sep = is_separable_ext(E)
    report = {
        "degree": E.degree,
        "gram_det": rat_str(sep.gram_det),
        "separable": sep.is_separable,
        "automorphisms": [",".join(rat_str(c) for c in a.r.coeffs) for a in auts],
        "automorphism_count": len(auts),
        "galois": len(auts) == E.degree,
    }
    return run.document("analyze", _field_json(E), [report]), EXIT_OK


def _search_command(run: _Run, command: str) -> tuple[dict, int]:
    E = make_field(parse_poly(run.args.polynomial))
    cfg = SearchConfig(
        S=_parse_set(run.args.set),
        count=run.args.count,
        max_height=run.max_height,
        seed=run.seed,
        mode=run.mode,
    )
    engine = search_primitive if command == "primitive" else search_normal
    code = EXIT_OK
    try:
        found = engine(E, cfg, threads=run.threads)
    except HeightCapExceeded as e:
        found = list(e.partial)
        run.budget_exhausted = True
        code = EXIT_BUDGET
    return run.document(command, _field_json(E), [_witness_json(w) for w in found]), code


def _cmd_norm_one(run: _Run) -> tuple[dict, int]:
    E = make_field(parse_poly(run.args.polynomial))
    engine = norm_one_normal if run.args.normal else norm_one_primitive
    code = EXIT_OK
    try:
        found = engine(
            E, run.args.count,
            max_height=run.max_height, seed=run.seed,
            mode=run.mode, threads=run.threads,
        )
    except HeightCapExceeded as e:
        found = list(e.partial)
        run.budget_exhausted = True
        code = EXIT_BUDGET
    return run.document("norm-one", _field_json(E), [_witness_json(w) for w in found]), code


def _cmd_pell(run: _Run) -> tuple[dict, int]:
    b = Fraction(run.args.b)
    c = Fraction(run.args.c)
    code = EXIT_OK
    try:
        pairs = pell_solutions(
            b, c, run.args.count,
            max_height=run.max_height, seed=run.seed,
            mode=run.mode, threads=run.threads,
        )
    except HeightCapExceeded as e:
        pairs = list(e.partial)
        run.budget_exhausted = True
        code = EXIT_BUDGET
    results = [{"x": rat_str(x), "y": rat_str(y)} for x, y in pairs]
    field = {"form": "x^2 + b*x*y + c*y^2 = 1", "b": rat_str(b), "c": rat_str(c)}
    return run.document("pell", field, results), code


def _cmd_density_probe(run: _Run) -> tuple[dict, int]:
    polys = _parse_set(run.args.polynomials)
    for h in polys:
        if h.degree < 1:
            raise ConstantPolynomial(f"constant polynomial in probe list: {h}")
    m = run.args.grid
    d = run.args.degree
    grid = range(-m, m + 1)
    points = [()]
    for h in polys:
        points = [p + (h(Fraction(t)),) for p in points for t in grid]
    verdict = no_low_degree_relation(points, d)
    report = {
        "polynomials": [format_poly(h) for h in polys],
        "relation_degree": d,
        "grid": m,
        "points": len(points),
        "no_relation": verdict,
    }
    return run.document("density-probe", None, [report]), EXIT_OK


def _render_text(doc: dict) -> str:
    lines = []
    field = doc.get("field")
    if field:
        if "polynomial" in field:
            lines.append(f"field: {field['polynomial']} (degree {field['degree']})")
        elif "form" in field:
            lines.append(
                f"form: {field['form']} with b = {_pretty_rat(field['b'])}, "
                f"c = {_pretty_rat(field['c'])}"
            )
    for r in doc["results"]:
        if doc["command"] == "analyze":
            lines.append(f"degree: {r['degree']}")
            lines.append(f"gram det: {_pretty_rat(r['gram_det'])}")
            lines.append(f"separable: {r['separable']}")
            lines.append(f"automorphism count: {r['automorphism_count']}")
            for img in r["automorphisms"]:
                coeffs = [Fraction(c) for c in img.split(",")]
                lines.append(f"  θ ↦ {format_elem(coeffs)}")
            lines.append(f"galois: {r['galois']}")
        elif doc["command"] == "pell":
            lines.append(f"(x, y) = ({_pretty_rat(r['x'])}, {_pretty_rat(r['y'])})")
        elif doc["command"] == "density-probe":
            lines.append(
                f"probe of {'; '.join(r['polynomials'])} at degree "
                f"{r['relation_degree']} on grid ±{r['grid']}: "
                f"{'no relation' if r['no_relation'] else 'relation exists'}"
            )
        else:
            coeffs = [Fraction(c) for c in r["element"]]
            parts = [f"a = {format_elem(coeffs)}"]
            if r["norm_value"] is not None:
                parts.append(f"norm = {_pretty_rat(r['norm_value'])}")
            for p in r["per_h"]:
                mp = UPoly([Fraction(c) for c in p["min_poly"]])
                piece = f"minpoly[h={p['h']}] = {format_poly(mp)}"
                if p["normal_det"] is not None:
                    det = [Fraction(c) for c in p["normal_det"]]
                    piece += f", normal det = {format_elem(det)}"
                parts.append(piece)
            lines.append("   ".join(parts))
    if doc["diagnostics"]["budget_exhausted"]:
        lines.append("warning: height budget exhausted; results are partial")
    return "\n".join(lines)


def _pretty_rat(s: str) -> str:
    q = Fraction(s)
    return str(q.numerator) if q.denominator == 1 else str(q)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fieldlab",
        description=(
            "Exact constructions in number fields: automorphisms, primitive "
            "and normal generators, norm-one elements, Pell solutions. "
            "Text mode prints elements as polynomials in θ (e.g. 3/5 + 4/5*θ); "
            "--json prints coefficient arrays with every rational as an exact "
            "p/q string."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--max-height", type=int, default=None,
                        help="search budget: cap on coefficient height "
                             "(env FIELDLAB_MAX_HEIGHT, default 1000)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized mode (env FIELDLAB_SEED, default 0)")
    common.add_argument("--randomized", action="store_true",
                        help="sample candidates instead of enumerating")
    common.add_argument("--degree-cap", type=int, default=None,
                        help="max field degree for automorphism search "
                             "(env FIELDLAB_DEGREE_CAP, default 8)")
    common.add_argument("--prime-bound", type=int, default=None,
                        help="largest prime tried when splitting f (default 10000)")
    common.add_argument("--threads", type=int, default=1,
                        help="candidate-testing threads (results identical for any count)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="degree, trace form, automorphisms, Galois verdict")
    p.add_argument("polynomial", help="defining polynomial in x, e.g. \"x^2+1\"")

    p = sub.add_parser("primitive", parents=[common],
                       help="elements a with every h(a) a generator")
    p.add_argument("polynomial")
    p.add_argument("--set", default="x",
                   help="';'-separated polynomials h (default \"x\")")
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("normal", parents=[common],
                       help="elements a with every h(a) a normal generator")
    p.add_argument("polynomial")
    p.add_argument("--set", default="x")
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("norm-one", parents=[common],
                       help="norm-one generators via a = b^n/N(b)")
    p.add_argument("polynomial")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--normal", action="store_true",
                   help="additionally require a normal conjugate basis")

    p = sub.add_parser("pell", parents=[common],
                       help="rational solutions of x^2 + b*x*y + c*y^2 = 1")
    p.add_argument("--b", required=True, help="rational coefficient b (use --b=-1/2 for negatives)")
    p.add_argument("--c", required=True, help="rational coefficient c")
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("density-probe", parents=[common],
                       help="certify no low-degree relation on a value grid")
    p.add_argument("polynomials", help="';'-separated polynomial list")
    p.add_argument("--degree", type=int, default=1,
                   help="max total degree of the tested relations")
    p.add_argument("--grid", type=int, default=10,
                   help="evaluation grid is the integer box ±grid")

    return parser


_DISPATCH = {
    "analyze": _cmd_analyze,
    "primitive": lambda run: _search_command(run, "primitive"),
    "normal": lambda run: _search_command(run, "normal"),
    "norm-one": _cmd_norm_one,
    "pell": _cmd_pell,
    "density-probe": _cmd_density_probe,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        run = _Run(args)
        doc, code = _DISPATCH[args.command](run)
    except NotGalois as e:
        print(f"error: not a Galois extension ({e.count} automorphisms)", file=sys.stderr)
        return EXIT_NOT_GALOIS
    except _INTERNAL_CAP_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL_CAP
    except _INVALID_INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    doc["diagnostics"]["timings"]["total_ms"] = int((time.monotonic() - started) * 1000)
    if args.json:
        print(json.dumps(doc, ensure_ascii=False, indent=2))
    else:
        print(_render_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
