"""Command line: ``lehmus logic|geom|verify ...``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from lehmus import bisectors as bc
from lehmus import construction as geo
from lehmus import logic
from lehmus.catalog import verify_catalog
from lehmus.harness import ConfigError, SampleConfig, SamplingError, run_full_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _point(text: str) -> geo.Point:
    try:
        x, y = text.split(",")
        return geo.Point(float(x), float(y))
    except ValueError:
        raise UsageError(f"bad point {text!r}, expected 'x,y' with decimal coordinates") from None


def _formula(text: str) -> logic.Formula:
    try:
        return logic.parse_formula(text)
    except logic.ParseError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def _triangle(args) -> bc.TriangleSides:
    try:
        return bc.new_triangle(args.a, args.b, args.c)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None


def cmd_logic_table(args, out) -> int:
    try:
        table = logic.truth_table(_formula(args.formula))
    except logic.VariableLimitError as exc:
        raise UsageError(str(exc)) from None
    print(table.format(), file=out)
    return EXIT_OK


def cmd_logic_equiv(args, out) -> int:
    f, g = _formula(args.f), _formula(args.g)
    try:
        same = logic.are_equivalent(f, g)
    except logic.VariableLimitError as exc:
        raise UsageError(str(exc)) from None
    print("EQUIVALENT" if same else "NOT EQUIVALENT", file=out)
    return EXIT_OK


def cmd_logic_catalog(args, out) -> int:
    report = verify_catalog()
    for r in report.records:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.check_id:<24} {r.inputs['law']}", file=out)
    s = report.summary()
    print(f"{s['passed']}/{s['total']} laws hold", file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_geom_bisectors(args, out) -> int:
    t = _triangle(args)
    data = bc.bisector_data(t)
    try:
        s = bc.sign_theorem(t)
    except bc.SignLawViolation as exc:
        print(f"FAIL  {exc}", file=out)
        return EXIT_FAIL
    rows = [
        ("alpha", data.alpha),
        ("beta", data.beta),
        ("|AA1|^2", data.aa1_sq),
        ("|BB1|^2", data.bb1_sq),
        ("alpha-beta", bc.alpha_minus_beta(t)),
    ]
    for name, value in rows:
        print(f"{name} = {value}", file=out)
    symbol = {1: "+", 0: "0", -1: "-"}[s]
    print(f"sign(|AA1|^2-|BB1|^2) = sign(b-a) = {symbol}", file=out)
    return EXIT_OK


def cmd_geom_identity(args, out) -> int:
    t = _triangle(args)
    rep = bc.lehmus_identity(t)
    print(f"Y = {rep.y}", file=out)
    print(f"(|AA1|^2-|BB1|^2)/c = {rep.lhs}", file=out)
    print(f"(b-a)*Y = {rep.rhs}", file=out)
    print("PASS" if rep.passed else "FAIL", file=out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_geom_construct(args, out) -> int:
    A, B, C = _point(args.A), _point(args.B), _point(args.C)
    try:
        s = geo.build_scene(A, B, C)
    except (bc.DegenerateTriangleError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.dump_scene:
        print(json.dumps(s.to_dict(), indent=2, sort_keys=True), file=out)
        return EXIT_OK
    res_h, res_g = geo.power_relations(s)
    co = geo.hg_coincidence(s)
    defect = geo.parallelism_check(s)
    a, b, c = s.sides
    isosceles = geo._relative(a, b) <= geo.EQUAL_BISECTOR_TOL
    checks = [
        ("power relation at H", res_h, res_h <= geo.FUZZ_TOL),
        ("power relation at G", res_g, res_g <= geo.FUZZ_TOL),
        ("quadratic root for x", co.x_root_residual, co.x_root_residual <= geo.FUZZ_TOL),
        ("quadratic root for y", co.y_root_residual, co.y_root_residual <= geo.FUZZ_TOL),
        # Both directions of each equivalence must agree with the side test.
        ("H = G iff isosceles", co.gap, (co.gap <= geo.FUZZ_TOL) == isosceles),
        ("A1B1 || AB iff isosceles", defect, (abs(defect) <= geo.FUZZ_TOL) == isosceles),
    ]
    print(f"|AA1| = {s.aa1!r}  |BB1| = {s.bb1!r}  d = {s.d!r}  x = {s.x!r}  y = {s.y!r}", file=out)
    ok = True
    for name, value, passed in checks:
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name:<26} {value:.3e}", file=out)
    if co.equal_bisectors:
        congruent = geo.congruence_conclusion(s)
        ok &= congruent
        print(f"{'PASS' if congruent else 'FAIL'}  congruent AGC, BGC => CA = CB", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    try:
        cfg = SampleConfig(
            seed=args.seed, count=args.count, shape=args.shape, gap=args.gap,
            lo=args.lo, hi=args.hi,
        )
        report = run_full_suite(cfg, workers=args.workers)
    except (ConfigError, SamplingError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        Path(args.json).write_text(report.to_json())
    s = report.summary()
    for r in report.failures:
        print(f"FAIL  {r.check_id}  {json.dumps(r.inputs, sort_keys=True)}", file=out)
    print(f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed", file=out)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lehmus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    logic_p = sub.add_parser("logic", help="propositional formulas")
    logic_sub = logic_p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = logic_sub.add_parser("table", help="print a truth table")
    p.add_argument("formula")
    p.set_defaults(func=cmd_logic_table)
    p = logic_sub.add_parser("equiv", help="decide equivalence of two formulas")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_logic_equiv)
    p = logic_sub.add_parser("catalog", help="verify the built-in law catalog")
    p.set_defaults(func=cmd_logic_catalog)

    geom_p = sub.add_parser("geom", help="triangle checks")
    geom_sub = geom_p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func, help_ in (
        ("bisectors", cmd_geom_bisectors, "exact bisector ratios and squared lengths"),
        ("identity", cmd_geom_identity, "exact check of the bisector identity"),
    ):
        p = geom_sub.add_parser(name, help=help_)
        for side in ("a", "b", "c"):
            p.add_argument(side, help=f"side {side} as an integer or p/q")
        p.set_defaults(func=func)
    p = geom_sub.add_parser("construct", help="coordinate construction checks")
    p.add_argument("A", help="x,y")
    p.add_argument("B", help="x,y")
    p.add_argument("C", help="x,y")
    p.add_argument("--dump-scene", action="store_true", help="print the scene as JSON")
    p.set_defaults(func=cmd_geom_construct)

    p = sub.add_parser("verify", help="run every check over seeded samples")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--shape", choices=("any", "isosceles", "scalene"), default="any")
    p.add_argument("--gap", type=float, default=0.05, help="minimum side gap for the scalene class")
    p.add_argument("--lo", default="1", help="smallest side length")
    p.add_argument("--hi", default="10", help="largest side length")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
