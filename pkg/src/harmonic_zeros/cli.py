"""Command-line front end.

Usage:
    harmonic-zeros bounds --trinomial 5 3 0.5
    harmonic-zeros bounds --analytic 5 -8 1 -10          # 5z^3 - 8z^2 + z - 10
    harmonic-zeros verify --harmonic --h 1 0 0 0 0 -1 --g 0 --json
    harmonic-zeros solve --trinomial 5 3 2
    harmonic-zeros wind --trinomial 5 3 0.5 --radius 2
    harmonic-zeros sweep 5 3 0.1 4.0 40 --csv

Coefficients are given in DESCENDING powers.  A complex number is written
``re,im`` (or ``1+2j``); a bare number is real.  Values starting with ``-``
that argparse would mistake for an option (``-1,2``) can be passed with a
leading space, e.g. ``" -1,2"``.

Exit codes: 0 pass, 1 violation, 2 parse error, 3 invalid instance or case
mismatch, 4 solver failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import bounds as B
from .errors import (
    CaseMismatch,
    InvalidPolynomial,
    InvalidTrinomial,
    LowerBoundUndefined,
    SolverError,
)
from .poly_core import AnalyticPoly, Annulus, Disk, HarmonicPoly, HarmonicTrinomial, Region
from .real_roots import RealPoly, descartes_negative_bound, descartes_positive_bound
from .report import (
    bound_to_dict,
    instance_to_dict,
    root_to_dict,
    rows_to_csv,
    sweep,
    verify,
)
from .solver import SolverConfig, find_all_zeros, orientation_counts, winding_number

EXIT_PASS, EXIT_VIOLATION, EXIT_PARSE, EXIT_CASE, EXIT_SOLVER = range(5)


def parse_complex(token: str) -> complex:
    token = token.strip()
    try:
        if "," in token:
            re_part, im_part = token.split(",")
            return complex(float(re_part), float(im_part))
        return complex(token.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {token!r}") from None


def parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {token!r}") from None


def _instance_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--trinomial", nargs=3, metavar=("N", "K", "C"),
                       help="harmonic trinomial z^n + c conj(z)^k - 1; C is re[,im]")
    group.add_argument("--analytic", nargs="+", type=parse_complex, metavar="A",
                       help="analytic polynomial, descending coefficients")
    group.add_argument("--harmonic", action="store_true", help="h + conj(g) given by --h and --g")
    parser.add_argument("--h", nargs="+", type=parse_complex, metavar="A", help="h, descending coefficients")
    parser.add_argument("--g", nargs="+", type=parse_complex, metavar="B", help="g, descending coefficients")


def _solver_args(parser: argparse.ArgumentParser) -> None:
    d = SolverConfig()
    parser.add_argument("--grid-density", type=float, default=d.grid_density)
    parser.add_argument("--newton-tol", type=float, default=d.newton_tol)
    parser.add_argument("--max-newton-iters", type=int, default=d.max_newton_iters)
    parser.add_argument("--dedup-radius", type=float, default=d.dedup_radius)
    parser.add_argument("--search-radius-factor", type=float, default=d.search_radius_factor)
    parser.add_argument("--singular-threshold", type=float, default=d.singular_threshold)


def _config(args) -> SolverConfig:
    return SolverConfig(
        grid_density=args.grid_density,
        newton_tol=args.newton_tol,
        max_newton_iters=args.max_newton_iters,
        dedup_radius=args.dedup_radius,
        search_radius_factor=args.search_radius_factor,
        singular_threshold=args.singular_threshold,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="harmonic-zeros", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="every applicable inclusion region")
    _instance_args(p)
    p.add_argument("--json", action="store_true")

    for name, text in (("solve", "find all zeros"), ("verify", "bounds + zeros + containment + winding")):
        p = sub.add_parser(name, help=text)
        _instance_args(p)
        _solver_args(p)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("wind", help="winding number of f on |z| = radius")
    _instance_args(p)
    _solver_args(p)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="zero counts of z^n + c conj(z)^k - 1 over a range of real c")
    p.add_argument("n", type=parse_int)
    p.add_argument("k", type=parse_int)
    p.add_argument("c_start", type=float)
    p.add_argument("c_end", type=float)
    p.add_argument("steps", type=parse_int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    _solver_args(p)
    return parser


def _read_instance(args, parser):
    """Trinomial, harmonic or analytic instance from parsed arguments."""
    if args.trinomial:
        n, k, c = args.trinomial
        try:
            n, k, c = parse_int(n), parse_int(k), parse_complex(c)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
        return HarmonicTrinomial(n, k, c)
    if getattr(args, "analytic", None):
        return AnalyticPoly.from_descending(args.analytic)
    if args.h is None:
        parser.error("--harmonic needs --h")
    h = AnalyticPoly.from_descending(args.h)
    g = AnalyticPoly.from_descending(args.g or [0])
    # bounds that need deg h > deg g check it themselves
    return HarmonicPoly(h, g, general=True)


def _as_harmonic(inst) -> HarmonicPoly | HarmonicTrinomial:
    if isinstance(inst, AnalyticPoly):
        return HarmonicPoly(inst, AnalyticPoly((0j,)), general=True)
    return inst


# -- text rendering ----------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def describe_region(r: Region) -> str:
    if isinstance(r, Disk):
        return f"|z| {'<=' if r.closed else '<'} {_fmt(r.radius)}"
    if isinstance(r, Annulus):
        lo = "<=" if r.inner_closed else "<"
        hi = "<=" if r.outer_closed else "<"
        return f"{_fmt(r.inner)} {lo} |z| {hi} {_fmt(r.outer)}"
    return " or ".join(f"({describe_region(m)})" for m in r.members)


def describe_bound(b: B.BoundReport) -> str:
    line = f"{b.method.value:<20} {describe_region(b.region)}"
    if b.intermediate:
        line += "   [" + ", ".join(f"{k}={_fmt(v)}" for k, v in b.intermediate.items()) + "]"
    if b.flags:
        line += "   {" + ", ".join(b.flags) + "}"
    return line


def _zero_lines(zeros) -> list[str]:
    return [
        f"  {z.z.real:+.12f} {z.z.imag:+.12f}i   |z|={abs(z.z):.10f}   res={z.residual:.2e}   {z.orientation.value}"
        for z in zeros
    ]


# -- commands ----------------------------------------------------------------


def cmd_bounds(args, parser) -> int:
    inst = _read_instance(args, parser)
    extra = {}
    if isinstance(inst, HarmonicTrinomial):
        reports = B.trinomial_reports(inst)
    elif isinstance(inst, AnalyticPoly):
        reports = B.analytic_reports(inst)
        if all(a.imag == 0 for a in inst.coeffs):
            rp = RealPoly(tuple(a.real for a in inst.coeffs))
            extra = {
                "descartes_positive": descartes_positive_bound(rp),
                "descartes_negative": descartes_negative_bound(rp),
            }
    else:
        reports = [B.harmonic_disk(inst) if inst.is_dominant else B.search_disk(inst)]
    if args.json:
        doc = {"instance": _instance_dict(inst), "regions": [bound_to_dict(b) for b in reports]}
        doc.update(extra)
        print(json.dumps(doc, indent=2))
    else:
        for b in reports:
            print(describe_bound(b))
        for k, v in extra.items():
            print(f"{k:<20} {v}")
    return EXIT_PASS


def _instance_dict(inst):
    if isinstance(inst, AnalyticPoly):
        return {"kind": "analytic", "a": [[a.real, a.imag] for a in inst.coeffs], "order": "ascending"}
    return instance_to_dict(inst)


def cmd_solve(args, parser) -> int:
    inst = _as_harmonic(_read_instance(args, parser))
    p = inst.to_harmonic() if isinstance(inst, HarmonicTrinomial) else inst
    zeros = find_all_zeros(p, _config(args))
    sp, sr, sing = orientation_counts(zeros)
    if args.json:
        doc = {
            "instance": instance_to_dict(inst),
            "zeros": [root_to_dict(z) for z in zeros],
            "counts": {"total": len(zeros), "sense_preserving": sp, "sense_reversing": sr, "singular": sing},
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"{len(zeros)} zeros ({sp} sense-preserving, {sr} sense-reversing, {sing} singular)")
        print("\n".join(_zero_lines(zeros)))
    return EXIT_PASS


def cmd_verify(args, parser) -> int:
    inst = _as_harmonic(_read_instance(args, parser))
    rep = verify(inst, _config(args))
    if args.json:
        print(rep.to_json())
    else:
        for b in rep.regions:
            print(describe_bound(b))
        print(f"{len(rep.zeros)} zeros")
        lines = _zero_lines(rep.zeros)
        for line, row in zip(lines, rep.containment):
            print(line + ("" if all(row) else "   OUTSIDE"))
        for w in rep.winding_checks:
            status = "ok" if w["matched"] else "MISMATCH"
            print(f"winding[{w['name']}] r={_fmt(w['radius'])}: {w['winding']} vs expected {w['expected']} {status}")
        if rep.count_check:
            cc = rep.count_check
            print(f"count {cc['count']} in envelope {cc['envelope']}: {cc['within']}")
        print(f"verdict: {rep.verdict}")
    return EXIT_PASS if rep.verdict == "pass" else EXIT_VIOLATION


def cmd_wind(args, parser) -> int:
    inst = _as_harmonic(_read_instance(args, parser))
    p = inst.to_harmonic() if isinstance(inst, HarmonicTrinomial) else inst
    w = winding_number(p, args.radius, _config(args))
    if args.json:
        print(json.dumps({"radius": args.radius, "winding": w.winding,
                          "min_modulus_on_contour": w.min_modulus_on_contour, "samples_used": w.samples_used}))
    else:
        print(f"winding number on |z| = {_fmt(args.radius)}: {w.winding}")
    return EXIT_PASS


def cmd_sweep(args, parser) -> int:
    try:
        rows = sweep(args.n, args.k, args.c_start, args.c_end, args.steps, _config(args))
    except ValueError as exc:
        if isinstance(exc, InvalidTrinomial):
            raise
        parser.error(str(exc))
    if args.csv:
        sys.stdout.write(rows_to_csv(rows))
    elif args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'c':>8} {'count':>6} {'signed':>6} {'wind':>5} {'inner':>10} {'outer':>10} {'disk':>10}  status")
        for r in rows:
            inner = _fmt(r["annulus_inner"]) if r["annulus_inner"] != "" else "-"
            outer = _fmt(r["annulus_outer"]) if r["annulus_outer"] != "" else "-"
            print(f"{r['c']:>8.4g} {r['zero_count']!s:>6} {r['signed_count']!s:>6} {r['winding']!s:>5} "
                  f"{inner:>10.8} {outer:>10.8} {_fmt(r['disk_radius']):>10.8}  {r['status']}")
    return EXIT_PASS if all(r["status"] == "ok" for r in rows) else EXIT_VIOLATION


COMMANDS = {"bounds": cmd_bounds, "solve": cmd_solve, "verify": cmd_verify, "wind": cmd_wind, "sweep": cmd_sweep}


def main(argv=None) -> int:
    # numba probes for TBB on first parallel launch and warns when it is too old
    warnings.filterwarnings("ignore", message="The TBB threading layer")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except (InvalidTrinomial, CaseMismatch, InvalidPolynomial, LowerBoundUndefined) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CASE
    except SolverError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except ValueError as exc:
        # remaining validation failures (e.g. deg h == deg g) are instance errors
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CASE


if __name__ == "__main__":
    sys.exit(main())
