"""Command-line front end.

Subcommands: ``analyze`` (full exact report for one graph), ``coeffs``
(coefficient tables), ``plot`` (CSV curve data), ``census`` (exhaustive or
streamed shape statistics), and ``verify`` (the full verification suite).

Conventions: exact rationals are printed as ``numerator/denominator``
strings, decimals carry 10 significant digits (12 in CSV output), identical
inputs produce byte-identical output, and the exit code is 0 on success, 1 on
an internal invariant violation, 2 on a usage or parse error.  The default
root-isolation tolerance 1e-9 can be overridden by ``--tol`` or the
``RELSHAPE_TOL`` environment variable (the flag wins).
"""

from __future__ import annotations

import argparse
import decimal
import itertools
import json
import os
import sys
from fractions import Fraction

from .census import run_census, generate_connected, stream_graph6
from .connsets import (
    check_coefficient_bounds,
    check_coefficient_identities,
    count_connected_sets,
    f_coefficients,
    sperner_failure,
)
from .graphs import (
    EdgeListParseError,
    FamilySpec,
    Graph,
    Graph6ParseError,
    cut_vertices,
    is_complete,
    is_connected,
    is_two_connected,
    make_family,
    min_vertex_cut,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .poly import (
    InternalCheckError,
    d_coefficients,
    derivative,
    eval_exact,
    family_profile,
    from_profile,
    second_derivative,
)
from .shape import (
    DEFAULT_TOL,
    analyze_profile,
    check_fixed_point_witness,
    check_sparse_decrease,
)
from .verification import run_checks

MIN_CUT_ORDER_CAP = 16  # brute-force vertex-cut search is exponential beyond this


class FamilyParseError(ValueError):
    pass


def parse_family(text: str) -> FamilySpec:
    """Parse ``kind:p1,p2`` selectors and ``union(a,b)`` compositions."""
    text = text.strip()
    for prefix in ("union(", "disjoint-union("):
        if text.startswith(prefix) and text.endswith(")"):
            inner = text[len(prefix):-1]
            parts = _split_top_level(inner)
            if len(parts) != 2:
                raise FamilyParseError(f"union takes two members, got {len(parts)}")
            return FamilySpec("disjoint-union",
                              parts=(parse_family(parts[0]), parse_family(parts[1])))
    if ":" not in text:
        raise FamilyParseError(f"family selector {text!r} needs kind:params")
    kind, _, params = text.partition(":")
    try:
        values = tuple(int(p) for p in params.split(","))
    except ValueError:
        raise FamilyParseError(f"non-integer family parameter in {params!r}") from None
    try:
        return FamilySpec(kind.strip(), values)
    except ValueError as exc:
        raise FamilyParseError(str(exc)) from None


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p for p in parts if p.strip()]


def fmt_exact(value) -> str:
    """Integers plainly, other rationals as numerator/denominator."""
    return str(Fraction(value))


def fmt_dec(value, sig: int = 10) -> str:
    """Exact rational rounded to ``sig`` significant digits."""
    frac = Fraction(value)
    if frac == 0:
        return "0"
    with decimal.localcontext() as ctx:
        ctx.prec = sig
        d = decimal.Decimal(frac.numerator) / decimal.Decimal(frac.denominator)
    return str(d)


def parse_tol(text: str) -> Fraction:
    try:
        tol = Fraction(decimal.Decimal(text))
    except (decimal.InvalidOperation, ValueError):
        raise ValueError(f"invalid tolerance {text!r}") from None
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return tol


def resolve_tol(args) -> Fraction:
    if args.tol is not None:
        return parse_tol(args.tol)
    env = os.environ.get("RELSHAPE_TOL")
    if env:
        return parse_tol(env)
    return DEFAULT_TOL


def resolve_graph(args) -> tuple[Graph, FamilySpec | None]:
    given = [name for name in ("graph6", "edges", "family") if getattr(args, name)]
    if len(given) != 1:
        raise ValueError("need exactly one of --graph6, --edges, --family")
    if args.graph6:
        return parse_graph6(args.graph6), None
    if args.edges:
        with open(args.edges, encoding="ascii") as handle:
            return parse_edge_list(handle.read()), None
    spec = parse_family(args.family)
    return make_family(spec), spec


def resolve_profile(g: Graph, spec: FamilySpec | None):
    if spec is not None:
        profile = family_profile(spec)
        if profile is not None:
            return profile
    return count_connected_sets(g)


def _root_doc(record) -> dict:
    return {
        "lo": fmt_dec(record.lo),
        "hi": fmt_dec(record.hi),
        "approx": fmt_dec(record.approx),
        "sign_change": record.sign_change,
    }


def build_analysis_document(g: Graph, spec: FamilySpec | None, tol: Fraction) -> dict:
    profile = resolve_profile(g, spec)
    report = analyze_profile(profile, tol)
    poly = from_profile(profile)
    d = d_coefficients(profile)
    identities = check_coefficient_identities(g, profile)
    bounds = check_coefficient_bounds(profile)
    sparse = check_sparse_decrease(g, profile)
    witness = check_fixed_point_witness(g, profile=profile)

    if is_complete(g):
        min_cut = "none"
    elif not is_connected(g):
        min_cut = 0
    elif g.n <= MIN_CUT_ORDER_CAP:
        value = min_vertex_cut(g)
        min_cut = "none" if value is None else value
    else:
        min_cut = None  # search skipped at this order

    return {
        "input": {
            "graph6": to_graph6(g),
            "family": spec.label() if spec else None,
            "n": g.n,
            "m": g.m,
            "max_degree": max(g.degrees()),
            "cut_vertices": len(cut_vertices(g)),
            "min_vertex_cut": min_cut,
            "connected": is_connected(g),
            "two_connected": is_two_connected(g),
        },
        "coefficients": {
            "c": [fmt_exact(x) for x in profile.c],
            "f": [fmt_exact(x) for x in f_coefficients(profile)],
            "d": [fmt_exact(x) for x in d.values],
        },
        "polynomial": {"coeffs": [fmt_exact(x) for x in poly.coeffs]},
        "shape": {
            "class": report.shape_class,
            "deriv_at_0": fmt_exact(report.deriv_at_0),
            "deriv_at_1": fmt_exact(report.deriv_at_1),
            "concave_down_near_0": report.concave_down_near_0,
            "concavity_near_1": report.concavity_near_1,
            "decrease_intervals": [
                {"lo": fmt_dec(iv.lo), "hi": fmt_dec(iv.hi)}
                for iv in report.decrease_intervals
            ],
            "critical_points": [_root_doc(r) for r in report.critical_points],
            "inflections": [_root_doc(r) for r in report.inflections],
            "fixed_points": [_root_doc(r) for r in report.fixed_points],
        },
        "checks": {
            "coefficient_identities": {
                "passed": identities.passed,
                "items": [
                    {
                        "label": item.label,
                        "applicable": item.applicable,
                        "lhs": None if item.lhs is None else fmt_exact(item.lhs),
                        "rhs": None if item.rhs is None else fmt_exact(item.rhs),
                        "passed": item.passed,
                    }
                    for item in identities.items
                ],
            },
            "coefficient_bounds": {
                "passed": bounds.passed,
                "first_violation": list(bounds.first_violation) if bounds.first_violation else None,
            },
            "sperner_failure": sperner_failure(profile),
            "sparse_decrease": {
                "applicable": sparse.applicable,
                "point": None if sparse.point is None else fmt_exact(sparse.point),
                "deriv_value": None if sparse.deriv_value is None else fmt_exact(sparse.deriv_value),
                "decreasing": sparse.decreasing_at_point,
            },
            "fixed_point_witness": {
                "applicable": witness.applicable,
                "max_degree": witness.max_degree,
                "point": None if witness.point is None else fmt_exact(witness.point),
                "value": None if witness.value is None else fmt_exact(witness.value),
                "below": witness.below,
            },
        },
        "tol": fmt_exact(tol),
    }


def render_analysis_text(doc: dict) -> str:
    lines = []
    inp = doc["input"]
    label = inp["family"] or inp["graph6"]
    lines.append(f"graph {label}")
    min_cut = inp["min_vertex_cut"]
    min_cut_text = "(skipped)" if min_cut is None else str(min_cut)
    lines.append(
        f"  n={inp['n']} m={inp['m']} max_degree={inp['max_degree']} "
        f"cut_vertices={inp['cut_vertices']} min_vertex_cut={min_cut_text} "
        f"connected={inp['connected']}")
    lines.append(f"  graph6: {inp['graph6']}")
    co = doc["coefficients"]
    lines.append("  c: " + " ".join(co["c"]))
    lines.append("  F: " + " ".join(co["f"]))
    lines.append("  d: " + (" ".join(co["d"]) if co["d"] else "(none)"))
    lines.append("  polynomial coefficients: " + " ".join(doc["polynomial"]["coeffs"]))
    sh = doc["shape"]
    lines.append(f"shape: class={sh['class']} deriv_at_0={sh['deriv_at_0']} "
                 f"deriv_at_1={sh['deriv_at_1']} "
                 f"concave_down_near_0={sh['concave_down_near_0']} "
                 f"concavity_near_1={sh['concavity_near_1']:+d}")
    if sh["decrease_intervals"]:
        for iv in sh["decrease_intervals"]:
            lines.append(f"  decrease interval: ({iv['lo']}, {iv['hi']})")
    else:
        lines.append("  decrease intervals: none")
    for key in ("critical_points", "inflections", "fixed_points"):
        label = key.replace("_", " ")
        if sh[key]:
            for r in sh[key]:
                kind = "crossing" if r["sign_change"] else "tangential"
                lines.append(f"  {label[:-1]}: {r['approx']} in [{r['lo']}, {r['hi']}] ({kind})")
        else:
            lines.append(f"  {label}: none")
    ck = doc["checks"]
    lines.append("checks:")
    lines.append(f"  coefficient identities: "
                 f"{'pass' if ck['coefficient_identities']['passed'] else 'FAIL'}")
    for item in ck["coefficient_identities"]["items"]:
        if not item["applicable"]:
            lines.append(f"    {item['label']}: n/a")
        else:
            verdict = "ok" if item["passed"] else "MISMATCH"
            lines.append(f"    {item['label']}: {item['lhs']} = {item['rhs']} {verdict}")
    bounds = ck["coefficient_bounds"]
    lines.append(f"  coefficient bounds: {'pass' if bounds['passed'] else 'FAIL at (k,t)=' + str(tuple(bounds['first_violation']))}")
    lines.append(f"  sperner failure: {ck['sperner_failure']}")
    sd = ck["sparse_decrease"]
    if sd["applicable"]:
        lines.append(f"  sparse decrease: f'({sd['point']}) = {sd['deriv_value']} "
                     f"({'decreasing' if sd['decreasing'] else 'NOT decreasing'})")
    else:
        lines.append("  sparse decrease: not applicable (m > 0.0851 n^2)")
    fw = ck["fixed_point_witness"]
    if fw["point"] is None:
        lines.append("  fixed-point witness: not defined (edgeless graph)")
    else:
        rel = "<" if fw["below"] else ">="
        applicability = "2-connected" if fw["applicable"] else "not 2-connected"
        lines.append(f"  fixed-point witness: f({fw['point']}) {rel} {fw['point']} ({applicability})")
    lines.append(f"tol: {doc['tol']}")
    return "\n".join(lines) + "\n"


def _add_graph_selector(parser):
    parser.add_argument("--graph6", help="graph6 string")
    parser.add_argument("--edges", help="edge-list file: n then u v pairs, 0-based")
    parser.add_argument("--family",
                        help="family selector kind:params, e.g. path:6, "
                             "complete-bipartite:3,3, union(star:20,complete:1)")


def cmd_analyze(args) -> int:
    g, spec = resolve_graph(args)
    doc = build_analysis_document(g, spec, resolve_tol(args))
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        sys.stdout.write(render_analysis_text(doc))
    return 0


def cmd_coeffs(args) -> int:
    g, spec = resolve_graph(args)
    profile = resolve_profile(g, spec)
    f = f_coefficients(profile)
    d = d_coefficients(profile)
    identities = check_coefficient_identities(g, profile)
    flagged = {item.label: item for item in identities.items}
    rows = []
    for k in range(profile.n + 1):
        note = ""
        if k == 0:
            note = _identity_note(flagged, "c0_zero")
        elif k == 1:
            note = _identity_note(flagged, "c1_order")
        elif k == 2:
            note = _identity_note(flagged, "c2_size")
        elif k == 3:
            note = _identity_note(flagged, "c3_wedges_minus_triangles")
        if k == profile.n - 1 and "penultimate_noncut" in flagged:
            note = _identity_note(flagged, "penultimate_noncut")
        if k == profile.n and "full_set_connected" in flagged:
            note = _identity_note(flagged, "full_set_connected")
        rows.append({
            "k": k,
            "c": fmt_exact(profile.c[k]),
            "f": fmt_exact(f[k]),
            "d": fmt_exact(d.at(k)) if 1 <= k <= profile.n - 1 else None,
            "note": note,
        })
    if args.json:
        print(json.dumps({"n": profile.n, "rows": rows}, indent=2, sort_keys=True))
        return 0
    widths = {
        "k": max(len(str(r["k"])) for r in rows),
        "c": max(len(r["c"]) for r in rows),
        "f": max(len(r["f"]) for r in rows),
        "d": max(len(r["d"] or "-") for r in rows),
    }
    print(f"{'k':>{widths['k']}}  {'c_k':>{widths['c']}}  "
          f"{'F_k':>{widths['f']}}  {'d_k':>{widths['d']}}")
    for r in rows:
        d_text = r["d"] if r["d"] is not None else "-"
        line = (f"{r['k']:>{widths['k']}}  {r['c']:>{widths['c']}}  "
                f"{r['f']:>{widths['f']}}  {d_text:>{widths['d']}}")
        if r["note"]:
            line += f"  {r['note']}"
        print(line)
    return 0


def _identity_note(flagged, label) -> str:
    item = flagged.get(label)
    if item is None or not item.applicable:
        return ""
    return f"[{label}: {'ok' if item.passed else 'MISMATCH'}]"


def cmd_plot(args) -> int:
    if args.samples < 2:
        raise ValueError("need at least 2 samples")
    g, spec = resolve_graph(args)
    profile = resolve_profile(g, spec)
    poly = from_profile(profile)
    if args.which == "f":
        coeffs = poly.coeffs
    elif args.which == "f1":
        coeffs = derivative(poly)
    else:
        coeffs = second_derivative(poly)
    out = open(args.out, "w", encoding="ascii") if args.out else sys.stdout
    try:
        out.write("p,value\n")
        for i in range(args.samples):
            p = Fraction(i, args.samples - 1)
            value = eval_exact(coeffs, p)
            out.write(f"{fmt_dec(p, 12)},{fmt_dec(value, 12)}\n")
    finally:
        if args.out:
            out.close()
    return 0


def _census_doc(summary) -> dict:
    return {
        "order": summary.order,
        "total_connected": summary.total_connected,
        "with_decrease": summary.with_decrease,
        "inflection_histogram": {str(k): v for k, v in summary.inflection_histogram.items()},
        "fixed_point_histogram": {str(k): v for k, v in summary.fixed_point_histogram.items()},
        "class_histogram": dict(summary.class_histogram),
        "exemplars": {k: list(v) for k, v in summary.exemplars.items()},
    }


def cmd_census(args) -> int:
    if bool(args.n) == bool(args.input):
        raise ValueError("need exactly one of --n or --input")
    tol = resolve_tol(args)
    if args.n:
        source = iter(generate_connected(args.n))
    else:
        source = iter(stream_graph6(args.input))
    first = next(source, None)
    if first is None:
        # an empty stream has no order; report zero totals and succeed
        if args.json:
            print(json.dumps({"order": None, "total_connected": 0}, sort_keys=True))
        else:
            print("census: 0 graphs")
        return 0
    summary = run_census(itertools.chain([first], source), tol=tol,
                         jobs=args.jobs, exemplar_cap=args.exemplars)
    if args.json:
        print(json.dumps(_census_doc(summary), indent=2, sort_keys=True))
        return 0
    print(f"order {summary.order} census: {summary.total_connected} graphs")
    print(f"  decrease: {summary.with_decrease}/{summary.total_connected}")
    print("  inflections: " + " ".join(
        f"{k}:{v}" for k, v in summary.inflection_histogram.items()))
    print("  fixed points: " + " ".join(
        f"{k}:{v}" for k, v in summary.fixed_point_histogram.items()))
    print("  classes: " + " ".join(
        f"{k}:{v}" for k, v in summary.class_histogram.items()))
    for key, tags in summary.exemplars.items():
        print(f"  exemplars {key}: {' '.join(tags)}")
    return 0


def cmd_verify(args) -> int:
    tol = resolve_tol(args)
    results = run_checks(slow=args.slow, tol=tol, jobs=args.jobs, only=args.only)
    if args.json:
        print(json.dumps(
            [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            indent=2, sort_keys=True))
    else:
        width = max((len(r.name) for r in results), default=0)
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}")
        failed = sum(1 for r in results if not r.passed)
        print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relshape",
        description="Exact node-reliability polynomials and their shape on (0,1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full exact shape report for one graph")
    _add_graph_selector(p)
    p.add_argument("--tol", help="root isolation tolerance (default 1e-9)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("coeffs", help="connected-set, failure-set, and d coefficient table")
    _add_graph_selector(p)
    p.add_argument("--tol", help=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("plot", help="CSV samples of the polynomial or a derivative")
    _add_graph_selector(p)
    p.add_argument("--samples", type=int, default=501)
    p.add_argument("--which", choices=["f", "f1", "f2"], default="f")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--tol", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("census", help="aggregate shape statistics over many graphs")
    p.add_argument("--n", type=int, help="generate all connected graphs of this order (2..8)")
    p.add_argument("--input", help="graph6 file, one graph per line")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--exemplars", type=int, default=10, help="exemplars kept per predicate")
    p.add_argument("--tol", help="root isolation tolerance (default 1e-9)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--slow", action="store_true", help="include the order-8 census")
    p.add_argument("--only", help="run only checks whose name contains this substring")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--tol", help="root isolation tolerance (default 1e-9)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6ParseError, EdgeListParseError, FamilyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
