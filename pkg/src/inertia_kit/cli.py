"""``inertia-kit`` command line.

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch,
3 unsupported input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import graphs as gr
from .algebra import InertiaSet
from .dsl import format_family_spec, parse_family_spec
from .engine import InertiaEngine
from .errors import InertiaKitError, NotRepresentable, ParseError, Unsupported, UnsupportedBlock
from .formulas import inertia_formula
from .notation import format_t_notation, parse_t_notation
from .oracle import (DEFAULT_BUDGET, DEFAULT_DIAG, DEFAULT_OFFDIAG, DEFAULT_ORDER_CAP, DEFAULT_TOL,
                     enumerate_realizations, verify_containment)
from .render import render_ascii, render_svg

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_UNSUPPORTED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _values(text: str) -> tuple[float, ...]:
    """``"-2,-1,1,2"`` or ``"-2..2"`` (an integer range)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
            return tuple(float(v) for v in range(lo, hi + 1))
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad value list {text!r}") from exc


def describe(s: InertiaSet) -> str:
    """T-notation when the set has one, otherwise the raw points."""
    try:
        return format_t_notation(s)
    except NotRepresentable:
        return "{" + ", ".join(f"({p},{q})" for p, q in s.sorted_points()) + "}"


def _points(s) -> list:
    return [list(p) for p in sorted(s)]


def _plain(points) -> str:
    return ", ".join(f"({p},{q})" for p, q in sorted(points)) or "none"


def _emit(args, payload: dict, text: str):
    print(json.dumps(payload, indent=2) if args.json else text)


def _graph_from(args):
    """Returns ``(spec or None, graph)`` from ``target`` / ``--edges``."""
    if getattr(args, "edges", None):
        with open(args.edges) as fh:
            return None, gr.read_edge_list(fh.read())
    if not args.target:
        raise ParseError("a family spec or --edges FILE is required", 1, 1, "spec")
    spec = parse_family_spec(args.target)
    return spec, gr.build(spec)


def _sample(args, g):
    return enumerate_realizations(
        g, offdiag=args.offdiag, diag=args.diag, budget=args.budget, seed=args.seed,
        tol=args.tol, order_cap=args.order_cap, method=args.method,
    )


def cmd_formula(args) -> int:
    spec = parse_family_spec(args.target)
    res = inertia_formula(spec, corrected=args.corrected)
    payload = {"spec": format_family_spec(spec), "t_notation": describe(res.set), **res.to_dict()}
    _emit(args, payload, f"{describe(res.set)}    [{res.provenance}]")
    return EXIT_OK


def cmd_recurse(args) -> int:
    spec, g = _graph_from(args)
    s = InertiaEngine().inertia(g)
    payload = {"spec": format_family_spec(spec) if spec else None, "order": g.order,
               "t_notation": describe(s), **s.to_dict()}
    _emit(args, payload, describe(s))
    return EXIT_OK


def cmd_sample(args) -> int:
    spec, g = _graph_from(args)
    sample = _sample(args, g)
    predicted = None
    if spec is not None:
        try:
            predicted = inertia_formula(spec, corrected=args.corrected).set
        except Unsupported:
            predicted = None
    if predicted is None:
        try:
            predicted = InertiaEngine().inertia(g)
        except UnsupportedBlock:
            predicted = None
    report = verify_containment(sample.attained, predicted if predicted is not None else sample.attained,
                                sample)
    payload = report.to_dict()
    payload["predicted"] = _points(predicted) if predicted is not None else None
    lines = [
        f"tested {sample.tested} of {sample.grid_size} matrices "
        f"({'exhaustive' if sample.exhaustive else f'sampled, seed {sample.seed}'}, {sample.method})",
        f"attained: {describe(sample.attained)}",
    ]
    if predicted is not None:
        lines.append(f"predicted: {describe(predicted)}")
        lines.append(f"containment: {'ok' if report.containment_ok else 'VIOLATED ' + _plain(report.violations)}")
        lines.append(f"not attained on this grid: {_plain(report.missing_predicted)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if report.containment_ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    spec = parse_family_spec(args.target)
    g = gr.build(spec)
    try:
        formula = inertia_formula(spec, corrected=args.corrected)
        fset = formula.set
    except Unsupported:
        formula, fset = None, None
    engine = InertiaEngine().inertia(g)
    reference = fset if fset is not None else engine
    out = {"spec": format_family_spec(spec), "order": g.order,
           "formula": describe(fset) if fset is not None else None,
           "provenance": formula.provenance if formula else None,
           "engine": describe(engine)}
    lines = [f"spec:    {out['spec']}",
             f"formula: {out['formula'] or 'n/a (no closed form)'}",
             f"engine:  {out['engine']}"]
    ok = True
    if fset is not None and fset != engine:
        ok = False
        out["formula_only"] = _points(fset.points - engine.points)
        out["engine_only"] = _points(engine.points - fset.points)
        lines.append(f"MISMATCH formula-only {out['formula_only']} engine-only {out['engine_only']}")
    if args.no_oracle or g.order > args.order_cap:
        out["oracle"] = None
        lines.append("oracle:  skipped")
    else:
        sample = _sample(args, g)
        report = verify_containment(sample.attained, reference, sample)
        out["oracle"] = report.to_dict()
        lines.append(f"oracle:  attained {describe(sample.attained)} "
                     f"({sample.tested} matrices, {'exhaustive' if sample.exhaustive else 'sampled'})")
        if report.containment_ok:
            lines.append(f"         contained; not attained on this grid: {_plain(report.missing_predicted)}")
        else:
            ok = False
            lines.append(f"VIOLATION attained outside prediction: {_plain(report.violations)}")
    out["ok"] = ok
    _emit(args, out, "\n".join(lines + ["ok" if ok else "FAILED"]))
    return EXIT_OK if ok else EXIT_MISMATCH


def _set_from_text(text: str) -> InertiaSet:
    try:
        return parse_t_notation(text)
    except ParseError:
        spec = parse_family_spec(text)
    try:
        return inertia_formula(spec).set
    except Unsupported:
        return InertiaEngine().inertia(gr.build(spec))


def cmd_render(args) -> int:
    s = _set_from_text(args.target)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_svg(s))
    art = render_ascii(s, axes=args.axes)
    _emit(args, {"t_notation": describe(s), "ascii": art, "svg": args.svg, **s.to_dict()}, art)
    return EXIT_OK


def cmd_parse(args) -> int:
    s = parse_t_notation(args.target)
    _emit(args, {"t_notation": describe(s), **s.to_dict()},
          f"{describe(s)}\n{len(s.points)} points: {_points(s.points)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="inertia-kit", description="Inertia sets of graphs: formulas, recursion, oracle.")
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    def oracle_opts(p):
        p.add_argument("--offdiag", type=_values, default=DEFAULT_OFFDIAG,
                       help="off-diagonal values, e.g. --offdiag=-2,-1,1,2")
        p.add_argument("--diag", type=_values, default=DEFAULT_DIAG, help="diagonal values, e.g. --diag=-2..2")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--seed", type=int, default=None, help="default: $INERTIA_KIT_SEED or built-in")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
        p.add_argument("--method", choices=("auto", "exact", "eigh"), default="auto")

    p = sub.add_parser("formula", help="closed-form inertia set of a family spec")
    p.add_argument("target")
    p.add_argument("--corrected", action="store_true", help="use the corrected binary-star formula")
    common(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("recurse", help="inertia set by cut-vertex recursion")
    p.add_argument("target", nargs="?")
    p.add_argument("--edges", metavar="FILE")
    common(p)
    p.set_defaults(func=cmd_recurse)

    p = sub.add_parser("sample", help="attained inertia points over a value grid")
    p.add_argument("target", nargs="?")
    p.add_argument("--edges", metavar="FILE")
    p.add_argument("--corrected", action="store_true")
    oracle_opts(p)
    common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="formula vs engine vs oracle")
    p.add_argument("target")
    p.add_argument("--corrected", action="store_true")
    p.add_argument("--no-oracle", action="store_true")
    oracle_opts(p)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw an inertia table")
    p.add_argument("target", help="T-notation or family spec")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--axes", action="store_true", help="label rows and columns")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("parse", help="parse T-notation")
    p.add_argument("target")
    common(p)
    p.set_defaults(func=cmd_parse)
    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedBlock as exc:
        print(f"unsupported block {list(exc.block_vertices)} ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InertiaKitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
