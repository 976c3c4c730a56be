"""Command line front end.

    aktangent count tangent --d 3 --profile A2
    aktangent count severi --d 4 --delta 3 [--tangent]
    aktangent classify --poly "y^2+x^3" --point 0,0 --max-k 5
    aktangent verify pencil --d 4 --trials 5 --seed 1
    aktangent verify ch-vs-closed --delta-max 8 --extra 1
    aktangent verify kazaryan
    aktangent verify table FILE
    aktangent table [FILE]

Exit codes: 0 success, 1 computation error or failed check, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .ak_local import NotOnCurve, classify
from .caporaso_harris import CHSolver
from .closed_forms import NoClosedForm, has_closed_form, nt_closed
from .consistency import check_ch_vs_closed, check_eq1_table, kazaryan_check
from .pencil import DEFAULT_HEIGHT, DEFAULT_MAX_DEGREE, DegenerateConfiguration, run_trials
from .polyparse import PolyParseError, parse_poly
from .profiles import ProfileParseError, SingularityProfile
from .tangency_recursion import MissingEntry, TableError, load_table, nt_recursive, starter_table

DEFAULT_SEED = 20240101


def _profile(text: str) -> SingularityProfile:
    try:
        return SingularityProfile.parse(text)
    except ProfileParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _poly(text: str):
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial: {exc}") from None


def _point(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("point must be written x,y")
    try:
        return Fraction(parts[0].strip()), Fraction(parts[1].strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad point {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="aktangent", description="Counts of A_k-singular plane curves tangent to a line.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--table", metavar="FILE", help="base value table (default: shipped starter table)")
    ap.add_argument("--format", choices=("plain", "json"), default="plain")
    sub = ap.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="compute a characteristic number")
    csub = count.add_subparsers(dest="what", required=True)
    ct = csub.add_parser("tangent", help="N_d^T(profile)")
    ct.add_argument("--d", type=int, required=True)
    ct.add_argument("--profile", type=_profile, required=True)
    ct.add_argument("--table", metavar="FILE", default=argparse.SUPPRESS)
    ct.add_argument("--recursive", action="store_true", help="use the table recursion even if a closed form exists")
    cs = csub.add_parser("severi", help="Caporaso-Harris delta-nodal count (unordered)")
    cs.add_argument("--d", type=int, required=True)
    cs.add_argument("--delta", type=int, required=True)
    cs.add_argument("--tangent", action="store_true", help="require tangency to a fixed line")

    cl = sub.add_parser("classify", help="singularity type of a curve at a point")
    cl.add_argument("--poly", type=_poly, required=True)
    cl.add_argument("--point", type=_point, default=(Fraction(0), Fraction(0)))
    cl.add_argument("--max-k", type=int, default=8)

    ver = sub.add_parser("verify", help="run consistency checks")
    vsub = ver.add_subparsers(dest="check", required=True)
    vp = vsub.add_parser("pencil", help="tangent members of random pencils = 2(d-1)")
    vp.add_argument("--d", type=int, required=True)
    vp.add_argument("--trials", type=int, default=5)
    vp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vp.add_argument("--height", type=int, default=DEFAULT_HEIGHT)
    vp.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    vc = vsub.add_parser("ch-vs-closed", help="Caporaso-Harris vs closed forms for A_1^delta")
    vc.add_argument("--delta-max", type=int, default=8)
    vc.add_argument("--extra", type=int, default=1)
    vc.add_argument("--below", type=int, default=0, help="also compare this many degrees below d_min (informational)")
    vsub.add_parser("kazaryan", help="quartics with A1 A2 A3 through 8 points = 2256")
    vt = vsub.add_parser("table", help="recursion over a table vs closed forms")
    vt.add_argument("file")

    tb = sub.add_parser("table", help="print a table in canonical form")
    tb.add_argument("file", nargs="?")
    return ap


def _emit(args, plain: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(plain)


def _table(args):
    path = getattr(args, "table", None)
    return load_table(path) if path else starter_table()


def _emit_reports(args, reports) -> int:
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in reports], sort_keys=True, default=str))
    else:
        for r in reports:
            print(r.line())
        fails = sum(not r.passed for r in reports)
        print(f"{len(reports) - fails}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


def cmd_count(args) -> int:
    if args.what == "severi":
        solver = CHSolver()
        value = solver.tangent(args.d, args.delta) if args.tangent else solver.plain(args.d, args.delta)
        _emit(args, str(value), {"d": args.d, "delta": args.delta, "tangent": args.tangent, "value": value})
        return 0
    prof = args.profile
    if has_closed_form(prof) and not args.recursive:
        res, method = nt_closed(args.d, prof), "closed-form"
    else:
        res, method = nt_recursive(args.d, prof, _table(args)), "recursion"
    if not res.valid:
        print(f"note: d={args.d} is below d_min={prof.d_min}; outside proven validity", file=sys.stderr)
    _emit(args, str(res.value), {
        "d": args.d, "profile": str(prof), "value": res.value, "method": method,
        "valid": res.valid, "ordered": True,
    })
    return 0


def cmd_classify(args) -> int:
    st = classify(args.poly, args.point, args.max_k)
    witness = st.witness
    if isinstance(witness, tuple):
        witness = [str(w) for w in witness]
    elif witness is not None:
        witness = str(witness)
    if args.format == "json":
        _emit(args, "", {"type": str(st), "k": st.k, "witness": witness, "reason": st.reason})
    else:
        print(str(st))
        if st.tag == "degenerate":
            print(f"reason: {st.reason}")
        else:
            label = {"smooth": "gradient", "A": "hessian_det" if st.k == 1 else f"A{(st.k or 0) + 1}"}[st.tag]
            print(f"witness {label}={witness}")
    return 0


def cmd_verify(args) -> int:
    if args.check == "pencil":
        trials = run_trials(args.d, args.trials, args.seed, height=args.height, max_degree=args.max_degree)
        ok = all(t.passed for t in trials)
        if args.format == "json":
            print(json.dumps([{"d": t.d, "seed": t.seed, "attempt": t.attempt, "count": t.count,
                               "expected": t.expected, "pass": t.passed} for t in trials], sort_keys=True))
        else:
            for t in trials:
                print(f"{'PASS' if t.passed else 'FAIL'} d={t.d} seed={t.seed} count={t.count} expected={t.expected}")
        return 0 if ok else 1
    if args.check == "ch-vs-closed":
        return _emit_reports(args, check_ch_vs_closed(args.delta_max, args.extra, args.below))
    if args.check == "kazaryan":
        return _emit_reports(args, [kazaryan_check(_table(args))])
    return _emit_reports(args, check_eq1_table(load_table(args.file)))


def cmd_table(args) -> int:
    table = load_table(args.file) if args.file else _table(args)
    sys.stdout.write(table.dumps())
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"count": cmd_count, "classify": cmd_classify, "verify": cmd_verify, "table": cmd_table}
    try:
        return handlers[args.command](args)
    except (ValueError, ArithmeticError, MissingEntry, NoClosedForm, NotOnCurve, TableError,
            DegenerateConfiguration, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
