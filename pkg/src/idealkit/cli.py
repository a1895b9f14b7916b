"""Command-line front end.

Exit codes: 0 on success, 1 when a verification or fuzz check fails,
2 on usage, parse, or evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dsl, fuzz, verify


def _print_report_human(report: dict, out):
    suite = report["suite"]
    out.write(f"suite {suite}: {report['passes']}/{report['cases']} pass\n")
    for key, value in report.get("counters", {}).items():
        out.write(f"  {key}: {value}\n")
    for failure in report["failures"]:
        name = failure.get("name", "")
        label = f" [{name}]" if name else ""
        out.write(f"  FAIL{label}\n")
        out.write(f"    expected: {failure['expected']}\n")
        out.write(f"    actual:   {failure['actual']}\n")
        if failure.get("instance_script"):
            script = failure["instance_script"].replace("\n", "\n      ")
            out.write(f"    script:\n      {script}\n")


def _cmd_run(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    try:
        for line in dsl.run_script(text, char=args.char):
            sys.stdout.write(line + "\n")
    except (dsl.ParseError, dsl.EvalError) as exc:
        sys.stderr.write(f"error: {args.file}:{exc}\n")
        return 2
    return 0


def _cmd_verify(args) -> int:
    report = verify.run_verify()
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        _print_report_human(report, sys.stdout)
        for check in report["checks"]:
            status = "ok  " if check["passed"] else "FAIL"
            sys.stdout.write(f"  {status} {check['name']}\n")
    return 0 if report["passes"] == report["cases"] else 1


def _cmd_fuzz(args) -> int:
    try:
        config = fuzz.FuzzConfig(
            seed=args.seed,
            max_vars_per_side=args.max_vars,
            max_generators=args.max_gens,
            max_exponent=args.max_exp,
            max_s=args.max_s,
            cases=args.cases,
            suites=tuple(args.suite) if args.suite else fuzz.SUITE_NAMES,
        )
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    status, reports = fuzz.run_fuzz(config, char=args.char)
    if args.json:
        sys.stdout.write(json.dumps(reports, indent=2, sort_keys=True) + "\n")
    else:
        for report in reports:
            _print_report_human(report, sys.stdout)
    return status


def _cmd_repl(args) -> int:
    return dsl.repl()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealkit",
        description="Exact computations with monomial ideals: saturated and "
        "symbolic powers, decompositions, binomial expansions, depth and "
        "regularity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a script file")
    run_p.add_argument("file")
    run_p.add_argument("--char", type=int, default=0, help="coefficient characteristic")
    run_p.set_defaults(func=_cmd_run)

    verify_p = sub.add_parser("verify", help="run the golden example suite")
    verify_p.add_argument("--json", action="store_true")
    verify_p.set_defaults(func=_cmd_verify)

    fuzz_p = sub.add_parser("fuzz", help="run seeded theorem fuzz suites")
    fuzz_p.add_argument("--seed", type=int, default=1)
    fuzz_p.add_argument("--cases", type=int, default=500)
    fuzz_p.add_argument(
        "--suite",
        action="append",
        choices=fuzz.SUITE_NAMES,
        help="suite to run (repeatable; default: all)",
    )
    fuzz_p.add_argument("--char", type=int, default=0)
    fuzz_p.add_argument("--max-vars", type=int, default=3)
    fuzz_p.add_argument("--max-gens", type=int, default=4)
    fuzz_p.add_argument("--max-exp", type=int, default=3)
    fuzz_p.add_argument("--max-s", type=int, default=3)
    fuzz_p.add_argument("--json", action="store_true")
    fuzz_p.set_defaults(func=_cmd_fuzz)

    repl_p = sub.add_parser("repl", help="interactive statement loop")
    repl_p.set_defaults(func=_cmd_repl)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
