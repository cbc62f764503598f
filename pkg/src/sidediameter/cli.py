"""Command-line front end: pair tables, identity checks, traces, benchmarks.

Exit codes: 0 success, 1 domain error (reported on stderr), 2 usage error.
Data payloads go to stdout and are deterministic for a fixed argument list;
timing information is diagnostic and kept off stdout unless --timings is
given.
"""

import argparse
import contextlib
import json
import sys
import time
from fractions import Fraction

from sidediameter import approx, identities, pairs


class UsageError(Exception):
    """Argument combinations argparse cannot express; mapped to exit 2."""


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational NUM/DEN or integer: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sidediameter",
        description="Exact arithmetic for side-and-diameter numbers.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    gen = sub.add_parser("gen", help="emit the first N pairs as CSV or JSON")
    gen.add_argument("--count", type=positive_int, required=True)
    gen.add_argument("--format", choices=("csv", "json"), default="csv")
    gen.add_argument("--digits", type=nonnegative_int, default=approx.DEFAULT_DECIMAL_DIGITS)

    nth = sub.add_parser("nth", help="compute the N-th pair (fast path by default)")
    nth.add_argument("n", type=positive_int)
    nth.add_argument("--iterative", action="store_true", help="use the linear-time path")
    nth.add_argument("--check-oracle", action="store_true",
                     help="compute both paths and confirm they agree")

    verify = sub.add_parser("verify", help="verify catalog identities symbolically")
    group = verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--identity", choices=sorted(identities.catalog_by_name()))
    group.add_argument("--all", action="store_true")

    trace = sub.add_parser("trace", help="derivation trace for a pair (JSON or --pretty)")
    trace.add_argument("pair", nargs="*", type=int, metavar="INT",
                       help="the pair as two integers: A D")
    trace.add_argument("--n", type=positive_int, help="use the N-th pair instead of A D")
    trace.add_argument("--pretty", action="store_true")

    ap = sub.add_parser("approx", help="one approximation step, preimages, or digit count")
    ap.add_argument("action", choices=("step", "preimage", "digits"))
    ap.add_argument("value", type=rational)
    ap.add_argument("--method", choices=("babylonian", "sd"), default="babylonian")
    ap.add_argument("--cap", type=positive_int, default=approx.DEFAULT_DIGIT_CAP)

    compare = sub.add_parser("compare", help="run both methods and tabulate convergence")
    compare.add_argument("--start", type=rational, default=Fraction(1))
    compare.add_argument("--steps", type=nonnegative_int, required=True)
    compare.add_argument("--format", choices=("csv", "json"), default="csv")
    compare.add_argument("--digits", type=nonnegative_int, default=approx.DEFAULT_DECIMAL_DIGITS)
    compare.add_argument("--cap", type=positive_int, default=approx.DEFAULT_DIGIT_CAP)

    bench = sub.add_parser("bench", help="time the fast N-th pair against the iterative oracle")
    bench.add_argument("--n", type=positive_int, required=True)
    bench.add_argument("--reps", type=positive_int, default=1)
    bench.add_argument("--timings", action="store_true",
                       help="include wall times on stdout (non-deterministic)")

    return parser


def _pair_line(p: pairs.SideDiameterPair) -> str:
    return f"n={p.index} a={p.a} d={p.d} e={p.sign}"


def _cmd_gen(args) -> int:
    table = pairs.generate(args.count)
    cap = approx.DEFAULT_DIGIT_CAP
    if args.format == "csv":
        print("n,a,d,e,ratio_decimal,correct_digits")
        for p in table:
            value = approx.ratio(p)
            print(
                f"{p.index},{p.a},{p.d},{p.sign},"
                f"{approx.decimal_string(value, args.digits)},"
                f"{approx.correct_digits(value, cap)}"
            )
    else:
        rows = []
        for p in table:
            value = approx.ratio(p)
            rows.append({
                "n": str(p.index),
                "a": str(p.a),
                "d": str(p.d),
                "e": str(p.sign),
                "ratio_decimal": approx.decimal_string(value, args.digits),
                "correct_digits": str(approx.correct_digits(value, cap)),
            })
        print(json.dumps(rows, indent=2))
    return 0


def _cmd_nth(args) -> int:
    p = pairs.nth_iterative(args.n) if args.iterative else pairs.nth(args.n)
    print(_pair_line(p))
    if args.check_oracle:
        other = pairs.nth(args.n) if args.iterative else pairs.nth_iterative(args.n)
        if p != other:
            print(f"oracle mismatch: fast and iterative paths disagree at n={args.n}",
                  file=sys.stderr)
            return 1
        print("oracle: match")
    return 0


def _cmd_verify(args) -> int:
    catalog = identities.identity_catalog()
    if args.identity:
        catalog = [identities.catalog_by_name()[args.identity]]
    all_ok = True
    for ident in catalog:
        ok = ident.holds()
        all_ok = all_ok and ok
        print(f"{ident.name}: {'OK' if ok else 'FAIL'}")
    return 0 if all_ok else 1


def _cmd_trace(args) -> int:
    if args.n is not None and not args.pair:
        p = pairs.nth(args.n)
    elif len(args.pair) == 2 and args.n is None:
        p = pairs.SideDiameterPair(args.pair[0], args.pair[1])
    else:
        raise UsageError("trace expects either two integers A D or --n K")
    trace = identities.trace_elegant(p)
    if args.pretty:
        print(trace.pretty())
    else:
        print(json.dumps(trace.to_json_dict(), indent=2))
    return 0


def _cmd_approx(args) -> int:
    if args.action == "step":
        advance = approx.babylonian_step if args.method == "babylonian" else approx.sd_ratio_step
        print(advance(args.value))
    elif args.action == "preimage":
        if args.method != "babylonian":
            raise UsageError("preimage is defined for the babylonian method only")
        roots = sorted(approx.babylonian_preimage(args.value))
        print("preimages: " + (", ".join(str(r) for r in roots) if roots else "none"))
    else:
        print(approx.correct_digits(args.value, args.cap))
    return 0


def _cmd_compare(args) -> int:
    babylonian, side_diameter = approx.compare_methods(args.start, args.steps, args.cap)
    if args.format == "csv":
        print("method,step,value_num,value_den,decimal_value,correct_digits,side")
        for report in (babylonian, side_diameter):
            for row in report.rows:
                print(
                    f"{report.method},{row.step},{row.value.numerator},"
                    f"{row.value.denominator},"
                    f"{approx.decimal_string(row.value, args.digits)},"
                    f"{row.correct_digits},{row.side_of_sqrt2}"
                )
    else:
        print(json.dumps(
            {
                "start": str(args.start),
                "steps": str(args.steps),
                "babylonian": babylonian.to_json_dict(args.digits),
                "side_diameter": side_diameter.to_json_dict(args.digits),
            },
            indent=2,
        ))
    return 0


def _time_best(func, n: int, reps: int) -> tuple[float, pairs.SideDiameterPair]:
    best = None
    result = None
    for _ in range(reps):
        begin = time.perf_counter()
        result = func(n)
        elapsed = time.perf_counter() - begin
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def _cmd_bench(args) -> int:
    fast_time, fast = _time_best(pairs.nth, args.n, args.reps)
    iter_time, iterative = _time_best(pairs.nth_iterative, args.n, args.reps)
    match = fast == iterative
    print(f"n={args.n}")
    print(f"a_digits={approx.decimal_digit_count(fast.a)}")
    print(f"d_digits={approx.decimal_digit_count(fast.d)}")
    print(f"results_match={'true' if match else 'false'}")
    timing_lines = [
        f"fast_seconds={fast_time:.6f} (best of {args.reps})",
        f"iterative_seconds={iter_time:.6f} (best of {args.reps})",
    ]
    for line in timing_lines:
        print(line, file=sys.stdout if args.timings else sys.stderr)
    return 0 if match else 1


_HANDLERS = {
    "gen": _cmd_gen,
    "nth": _cmd_nth,
    "verify": _cmd_verify,
    "trace": _cmd_trace,
    "approx": _cmd_approx,
    "compare": _cmd_compare,
    "bench": _cmd_bench,
}


def run(argv, stdout=None, stderr=None) -> int:
    """Parse argv and execute; returns the process exit code.

    Payload on stdout, diagnostics on stderr.  Streams default to the
    process streams and can be replaced for testing.
    """
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # pairs grow beyond the default str() limit
    with contextlib.ExitStack() as stack:
        if stdout is not None:
            stack.enter_context(contextlib.redirect_stdout(stdout))
        if stderr is not None:
            stack.enter_context(contextlib.redirect_stderr(stderr))
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        try:
            return _HANDLERS[args.verb](args)
        except UsageError as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return 2
        except (ValueError, ZeroDivisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
