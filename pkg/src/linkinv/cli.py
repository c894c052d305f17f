"""Command-line front end wiring the modules into reproducible reports.

Verbs: alex, norm, ball, sw, surgery, chi, report.  Exit codes: 0 success,
1 claim failure, 2 input error, 3 internal-consistency failure.  Output is
deterministic: identical inputs give byte-identical reports.  Bundled data
files are found by bare name when a path does not exist; the environment
variable LINKINV_DATA overrides the bundled-data directory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import fox, laurent, norm, polytope, surgery, sw

EXIT_OK = 0
EXIT_CLAIM = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class InputError(Exception):
    pass


def _data_dir():
    override = os.environ.get("LINKINV_DATA")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "data")


def _read_input(path):
    if os.path.exists(path):
        with open(path) as f:
            return f.read()
    candidate = os.path.join(_data_dir(), os.path.basename(path))
    if os.path.exists(candidate):
        with open(candidate) as f:
            return f.read()
    raise InputError(f"cannot read input file: {path}")


def _read_data(name):
    path = os.path.join(_data_dir(), name)
    if not os.path.exists(path):
        raise InputError(f"bundled data file missing: {name}")
    with open(path) as f:
        return f.read()


def _load_poly(path):
    try:
        return laurent.from_text(_read_input(path))
    except ValueError as exc:
        raise InputError(f"bad polynomial file {path}: {exc}") from exc


def _parse_class(text, arity):
    try:
        parts = [Fraction(v) for v in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad class {text!r}: {exc}") from exc
    if len(parts) != arity:
        raise InputError(
            f"class has {len(parts)} entries but the polynomial has arity {arity}"
        )
    return tuple(parts)


def _frac_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _emit(payload, as_json, text_lines):
    if as_json:
        print(json.dumps(payload, sort_keys=True, default=str))
    else:
        for line in text_lines:
            print(line)


def cmd_alex(args):
    text = _read_input(args.input)
    head = text.split(None, 1)[0] if text.strip() else ""
    if head == "pd":
        try:
            pd = fox.parse_pd(text)
            pres = fox.wirtinger_from_pd(pd)
        except ValueError as exc:
            raise InputError(f"bad pd file {args.input}: {exc}") from exc
    elif head == "gen":
        try:
            pres = fox.presentation_from_text(text)
        except ValueError as exc:
            raise InputError(f"bad presentation file {args.input}: {exc}") from exc
    else:
        raise InputError(f"unrecognized input header {head!r} in {args.input}")
    delta = fox.alexander_polynomial(pres)
    if delta.is_zero():
        poly_text = laurent.to_text(delta)
    else:
        poly_text = laurent.to_text(laurent.normalize_units(delta))
    payload = {
        "alexander": poly_text,
        "generators": pres.num_generators,
        "components": pres.arity,
    }
    lines = poly_text.rstrip("\n").splitlines()
    if args.check:
        if args.check != "eq3":
            raise InputError(f"unknown check name: {args.check}")
        expected = laurent.mt_link_polynomial()
        ok = not delta.is_zero() and laurent.normalize_units(delta) == expected
        payload["check"] = {"name": "eq3", "pass": ok}
        lines.append(f"check eq3: {'PASS' if ok else 'FAIL'}")
        _emit(payload, args.json, lines)
        return EXIT_OK if ok else EXIT_CLAIM
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_norm(args):
    p = _load_poly(args.input)
    if p.is_zero():
        raise InputError("zero polynomial has no norm data")
    phi = _parse_class(args.cls, p.arity)
    value = norm.poly_norm(p, phi)
    dv = norm.dual_vertex(p, phi)
    newton = norm.newton_polytope(p)
    cone = {}
    for v in newton.vertices:
        key = ",".join(str(int(c)) for c in v)
        cone[key] = dv.is_unique() and dv.vertex == tuple(int(c) for c in v)
    nb = norm.unit_ball(p)
    ball_facets = [
        " ".join(map(str, n)) + " <= " + _frac_str(c) for n, c in nb.ball.facets
    ]
    payload = {
        "norm": _frac_str(value),
        "dual_vertex": {"kind": dv.kind, "vertices": [list(v) for v in dv.vertices]},
        "cone": cone,
        "ball_facets": ball_facets,
    }
    lines = [f"norm {_frac_str(value)}"]
    if dv.kind == "unique":
        lines.append("dual_vertex unique " + ",".join(map(str, dv.vertex)))
    elif dv.kind == "boundary":
        lines.append(
            "dual_vertex boundary "
            + " ".join(",".join(map(str, v)) for v in dv.vertices)
        )
    else:
        lines.append("dual_vertex zero")
    for key in sorted(cone):
        lines.append(f"cone {key} {'true' if cone[key] else 'false'}")
    for f in ball_facets:
        lines.append("ball_facet " + f)
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_ball(args):
    p = _load_poly(args.input)
    if p.is_zero():
        raise InputError("zero polynomial has no unit ball")
    nb = norm.unit_ball(p)
    payload = {
        "vertices": nb.ball.num_vertices(),
        "facets": nb.ball.num_facets(),
        "vertex_list": [[_frac_str(c) for c in v] for v in nb.ball.vertices],
        "degenerate_directions": [list(v) for v in nb.recession],
    }
    lines = [
        f"ball vertices {nb.ball.num_vertices()}",
        f"ball facets {nb.ball.num_facets()}",
    ]
    for v in nb.ball.vertices:
        lines.append("v " + " ".join(_frac_str(c) for c in v))
    if nb.recession:
        lines.append(
            "warning: norm degenerate in directions "
            + " ".join(",".join(map(str, r)) for r in nb.recession)
        )
    if args.product_check:
        if p.arity != 4:
            raise InputError("--product-check requires an arity-4 polynomial")
        verdict, report = norm.subspace_restriction_check(p)
        payload["product_check"] = verdict
        payload["product_report"] = {
            k: v for k, v in report.items() if k != "ball_facets"
        }
        lines.append(f"product_check {'true' if verdict else 'false'}")
        if "degenerate" in report:
            lines.append(f"product_note {report['degenerate']}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_sw(args):
    p = _load_poly(args.input)
    if p.is_zero():
        raise InputError("zero polynomial has no SW data")
    swp = sw.sw_polynomial(p)
    report = sw.basic_classes_unit_coeff(swp)
    payload = {
        "sw_terms": laurent.to_text(swp),
        "basic_classes": [
            {"class": list(v), "coefficient": c} for v, c in report.classes
        ],
        "excluded": [{"class": list(v), "coefficient": c} for v, c in report.excluded],
    }
    lines = ["sw " + " ".join(laurent.to_text(swp).rstrip("\n").splitlines())]
    lines.append(f"basic_classes {len(report.classes)}")
    for v, c in report.classes:
        lines.append(f"basic {','.join(map(str, v))} {c:+d}")
    for v, c in report.excluded:
        lines.append(f"excluded {','.join(map(str, v))} {c:+d}")
    canonical = []
    if p.arity == 4:
        for ann in norm.fibered_annotations():
            try:
                rep = sw.canonical_class(p, ann.cohomology_class)
            except ValueError:
                continue
            canonical.append(rep)
    payload["canonical_classes"] = [
        {
            "class": list(r.source_class),
            "dual_vertex": list(r.dual_vertex),
            "canonical": list(r.canonical_class),
            "valence": r.valence,
        }
        for r in canonical
    ]
    for r in canonical:
        lines.append(
            "canonical class "
            + ",".join(map(str, r.source_class))
            + " -> "
            + ",".join(map(str, r.canonical_class))
            + f" valence {r.valence}"
        )
    sw_newton = norm.newton_polytope(swp)
    v1, v2 = (0, 0, 0, 2), (2, 2, 2, 0)
    if (
        p.arity == 4
        and polytope._as_point(v1) in sw_newton.vertices
        and polytope._as_point(v2) in sw_newton.vertices
    ):
        cmp = sw.valence_distinct(swp, v1, v2)
        payload["valences"] = {
            ",".join(map(str, cmp.vertex1)): cmp.valence1,
            ",".join(map(str, cmp.vertex2)): cmp.valence2,
        }
        payload["verdict"] = "distinct" if cmp.distinct else "not distinct"
        lines.append(
            f"valence {','.join(map(str, cmp.vertex1))} {cmp.valence1}"
        )
        lines.append(
            f"valence {','.join(map(str, cmp.vertex2))} {cmp.valence2}"
        )
        lines.append(f"verdict {payload['verdict']}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_surgery(args):
    try:
        data = surgery.link_from_text(_read_input(args.input))
    except ValueError as exc:
        raise InputError(f"bad link file {args.input}: {exc}") from exc
    M = surgery.surgery_presentation(data)
    U, D, V = surgery.smith_normal_form(M)
    inv = surgery.h1_of_surgery(data)
    orders = [surgery.meridian_order(data, i) for i in range(data.n)]
    payload = {
        "framings": list(data.framings),
        "presentation": [list(r) for r in M],
        "smith_diagonal": [D[i][i] for i in range(data.n)],
        "h1_rank": inv.rank,
        "h1_torsion": list(inv.torsion),
        "meridian_orders": ["infinite" if o == 0 else o for o in orders],
    }
    lines = ["framings " + " ".join(map(str, data.framings))]
    for row in M:
        lines.append("row " + " ".join(map(str, row)))
    lines.append("smith " + " ".join(str(D[i][i]) for i in range(data.n)))
    lines.append(f"h1 {inv}")
    for i, o in enumerate(orders):
        lines.append(f"meridian {i + 1} {'infinite' if o == 0 else o}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_chi(args):
    value = norm.chi_complexity(args.eulers)
    _emit({"chi_complexity": value}, args.json, [str(value)])
    return EXIT_OK


def _claims():
    """The bundled-data reproduction claims, in fixed order."""

    def eq3_claim():
        pd = fox.parse_pd(_read_data("mt_link.pd"))
        pres = fox.wirtinger_from_pd(pd)
        delta = laurent.normalize_units(fox.alexander_polynomial(pres))
        ok = delta == laurent.mt_link_polynomial()
        return ok, "Alexander polynomial of the bundled diagram equals eq3"

    def newton_claim():
        newton = norm.newton_polytope(laurent.mt_link_polynomial())
        interior = all(c > 0 for _, c in newton.facets)
        ok = newton.num_vertices() == 16 and interior
        return ok, f"{newton.num_vertices()} vertices, origin interior: {interior}"

    def dual_claim():
        d = laurent.mt_link_polynomial()
        a = norm.dual_vertex(d, (1, 1, 1, 1))
        b = norm.dual_vertex(d, (0, 0, 0, 1))
        ok = (
            a.is_unique()
            and a.vertex == (1, 1, 1, 0)
            and b.is_unique()
            and b.vertex == (0, 0, 0, 1)
        )
        return ok, "dual vertices xyz and t"

    def norm_claim():
        d = laurent.mt_link_polynomial()
        ok = norm.poly_norm(d, (1, 1, 1, 1)) == 6 and norm.poly_norm(
            d, (0, 0, 0, 1)
        ) == 2
        return ok, "norm values 6 and 2"

    def product_claim():
        verdict, _ = norm.subspace_restriction_check(laurent.mt_link_polynomial())
        return verdict, "unit ball = (slice at t=0) x [-1/2, 1/2]"

    def sw_claim():
        swp = sw.sw_polynomial(laurent.mt_link_polynomial())
        rep = sw.basic_classes_unit_coeff(swp)
        newton = norm.newton_polytope(swp)
        vs = set(newton.vertices)
        extreme = all(polytope._as_point(v) in vs for v, _ in rep.classes)
        ok = len(rep.classes) == 16 and extreme and newton.num_vertices() == 16
        return ok, f"{len(rep.classes)} basic classes, all vertices"

    def valence_claim():
        swp = sw.sw_polynomial(laurent.mt_link_polynomial())
        cmp = sw.valence_distinct(swp, (0, 0, 0, 2), (2, 2, 2, 0))
        return cmp.distinct, f"valences {cmp.valence1} vs {cmp.valence2}"

    def borromean_claim():
        data = surgery.link_from_text(_read_data("borromean0.link"))
        inv = surgery.h1_of_surgery(data)
        ok = inv.rank == 3 and not inv.torsion
        return ok, f"0-surgery homology {inv}"

    def meridian_claim():
        pd = fox.parse_pd(_read_data("mt_link.pd"))
        lk = fox.linking_numbers(pd)
        data = surgery.LinkingData(lk)
        orders = [surgery.meridian_order(data, i) for i in range(4)]
        ok = all(o == 0 for o in orders)
        return ok, f"canonical framings {data.framings}, all meridians infinite"

    return [
        ("eq3_reproduction", eq3_claim),
        ("newton_sixteen_vertices", newton_claim),
        ("dual_vertices", dual_claim),
        ("norm_values", norm_claim),
        ("product_structure", product_claim),
        ("sw_basic_classes", sw_claim),
        ("valence_distinction", valence_claim),
        ("borromean_surgery", borromean_claim),
        ("meridians_infinite", meridian_claim),
    ]


def cmd_report(args):
    results = []
    for name, claim in _claims():
        try:
            ok, detail = claim()
        except Exception as exc:  # a corrupt bundled file must fail its claim
            ok, detail = False, f"error: {exc}"
        results.append({"claim": name, "pass": ok, "detail": detail})
    lines = [
        f"{'PASS' if r['pass'] else 'FAIL'} {r['claim']}: {r['detail']}"
        for r in results
    ]
    all_ok = all(r["pass"] for r in results)
    lines.append(f"{'PASS' if all_ok else 'FAIL'} overall")
    _emit({"claims": results, "pass": all_ok}, args.json, lines)
    return EXIT_OK if all_ok else EXIT_CLAIM


def build_parser():
    parser = argparse.ArgumentParser(
        prog="linkinv",
        description="Exact combinatorial invariants of links.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("alex", help="Alexander polynomial from a pd or presentation file")
    p.add_argument("input")
    p.add_argument("--check", metavar="NAME", help="compare against a bundled value (eq3)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("norm", help="norm, dual vertex and cone report for a class")
    p.add_argument("input")
    p.add_argument("cls", metavar="class", help="comma-separated rationals")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("ball", help="unit-ball report")
    p.add_argument("input")
    p.add_argument("--product-check", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("sw", help="Seiberg-Witten basic-class report")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sw)

    p = sub.add_parser("surgery", help="surgery homology report")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("chi", help="complexity of a surface from component Euler characteristics")
    p.add_argument("eulers", nargs="+", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("report", help="run every bundled reproduction claim")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except fox.InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, laurent.NondivisibleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
