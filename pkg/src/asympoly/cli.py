"""Command line interface.

    asympoly compute "(8x^3+7)/(x-4)" [--method M] [--format F] [--show-matrices]
    asympoly verify  "(5x^3+13x^2+3x+9)/(4x^2+5x+7)"
    asympoly fuzz --trials N --max-degree D --coeff-bound B --seed S [--allow-equal-degrees]
    asympoly bench --degrees 4,8,16,32 [--coeff-bound B] [--seed S]

Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
3 semantic error (zero denominator).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Optional, Sequence, TextIO

from .asymptote import AsymptoteResult, CoefficientMatrix, Method, asymptote_of
from .bench import format_table, run_bench
from .oracle import FuzzConfig, cross_validate, run_campaign
from .parser import (
    ParseError,
    Style,
    format_polynomial,
    format_rational_function,
    parse_rational_function,
    polynomial_to_json,
    rational_to_json,
)
from .poly_core import Polynomial

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_SEMANTIC = 0, 1, 2, 3

_KIND = {0: "horizontal", 1: "oblique"}


def _degree_list(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out or any(d < 1 for d in out):
        raise argparse.ArgumentTypeError("degrees must be positive integers")
    return out


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=[s.value for s in Style], default="text")

    p = argparse.ArgumentParser(
        prog="asympoly", description="Exact asymptotes of rational functions."
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[fmt], help="compute the asymptote")
    c.add_argument("expression")
    c.add_argument(
        "--method", choices=[m.value for m in Method] + ["all"], default="determinant"
    )
    c.add_argument("--show-matrices", action="store_true")

    v = sub.add_parser("verify", parents=[fmt], help="cross-check every method")
    v.add_argument("expression")

    f = sub.add_parser("fuzz", parents=[fmt], help="randomised cross-method campaign")
    f.add_argument("--trials", type=_positive, required=True)
    f.add_argument("--max-degree", type=_positive, required=True)
    f.add_argument("--coeff-bound", type=_positive, required=True)
    f.add_argument("--seed", type=int, required=True)
    f.add_argument("--allow-equal-degrees", action="store_true")

    b = sub.add_parser("bench", parents=[fmt], help="time the methods by degree")
    b.add_argument("--degrees", type=_degree_list, required=True)
    b.add_argument("--coeff-bound", type=_positive, default=99)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeats", type=_positive, default=3)
    return p


# -- rendering -----------------------------------------------------------------


def _matrix_text(m: CoefficientMatrix) -> list[str]:
    cells = [[str(v) for v in row] for row in m.entries]
    width = max(len(c) for row in cells for c in row)
    return ["  | " + " ".join(c.rjust(width) for c in row) + " |" for row in cells]


def _matrix_latex(m: CoefficientMatrix) -> str:
    rows = [" & ".join(format_polynomial_const(v) for v in row) for row in m.entries]
    return "\\begin{vmatrix} " + " \\\\ ".join(rows) + " \\end{vmatrix}"


def format_polynomial_const(v) -> str:
    return format_polynomial(Polynomial.constant(v), Style.LATEX)


def _kind(k) -> str:
    if k < 0:
        return "proper fraction, horizontal asymptote y=0"
    return _KIND.get(k, "curvilinear")


def _result_json(text: str, res: AsymptoteResult, method_name: str) -> dict:
    return {
        "input": text,
        "k": res.k if isinstance(res.k, int) else None,
        "asymptote": polynomial_to_json(res.asymptote),
        "remainder": polynomial_to_json(res.remainder),
        "method": method_name,
        "proper_fraction": res.proper_fraction,
        "traces": [
            {
                "alpha": t.alpha,
                "det": rational_to_json(t.det_value),
                "theta": rational_to_json(t.theta),
            }
            for t in res.traces
        ],
    }


def _render_text(text: str, res: AsymptoteResult, show: bool, out: TextIO) -> None:
    print(f"input: {text}", file=out)
    k = res.k if isinstance(res.k, int) else "-inf"
    print(f"k: {k} ({_kind(res.k)})", file=out)
    print(f"method: {res.method.value}", file=out)
    print(f"asymptote: y = {format_polynomial(res.asymptote)}", file=out)
    print(f"remainder: {format_polynomial(res.remainder)}", file=out)
    if show:
        for t in res.traces:
            print(f"M_{t.alpha}:", file=out)
            if t.matrix is not None:
                for line in _matrix_text(t.matrix):
                    print(line, file=out)
            print(f"  det = {t.det_value}, theta_{t.alpha} = {t.theta}", file=out)


def _render_latex(text: str, res: AsymptoteResult, show: bool, out: TextIO) -> None:
    print(f"y = {format_polynomial(res.asymptote, Style.LATEX)}", file=out)
    if show:
        for t in res.traces:
            if t.matrix is not None:
                print(
                    f"\\theta_{{{t.alpha}}} = (-1)^{{{t.alpha}}}"
                    f"\\frac{{{_matrix_latex(t.matrix)}}}{{b^{{{t.alpha + 1}}}}}"
                    f" = {format_polynomial_const(t.theta)}",
                    file=out,
                )


# -- commands --------------------------------------------------------------------


def _cmd_compute(args, out: TextIO, err: TextIO) -> int:
    rf = parse_rational_function(args.expression)
    text = format_rational_function(rf)
    style = Style(args.format)
    methods = list(Method) if args.method == "all" else [Method(args.method)]
    results = [
        asymptote_of(rf, m, keep_matrices=args.show_matrices and m is Method.DETERMINANT)
        for m in methods
    ]
    agree = all(
        r.asymptote == results[0].asymptote and r.remainder == results[0].remainder
        for r in results
    )
    primary = results[0]
    if style is Style.JSON:
        doc = _result_json(text, primary, args.method)
        if args.method == "all":
            doc["agree"] = agree
            doc["methods"] = {
                r.method.value: {
                    "asymptote": polynomial_to_json(r.asymptote),
                    "remainder": polynomial_to_json(r.remainder),
                }
                for r in results
            }
        print(json.dumps(doc), file=out)
    else:
        render = _render_latex if style is Style.LATEX else _render_text
        for r in results:
            render(text, r, args.show_matrices, out)
    if not agree:
        print("methods disagree", file=err)
        return EXIT_FAILED
    return EXIT_OK


def _cmd_verify(args, out: TextIO, err: TextIO) -> int:
    rf = parse_rational_function(args.expression)
    rep = cross_validate(rf)
    if Style(args.format) is Style.JSON:
        print(
            json.dumps(
                {
                    "input": rep.expression,
                    "passed": rep.passed,
                    "asymptote": polynomial_to_json(rep.asymptote),
                    "remainder": polynomial_to_json(rep.remainder),
                    "methods": [m.value for m in rep.methods],
                    "lemma21_checks": rep.lemma21_checks,
                    "failures": rep.failures,
                }
            ),
            file=out,
        )
    else:
        style = Style(args.format)
        if rep.passed:
            print(f"all methods agree: {format_polynomial(rep.asymptote, style)}", file=out)
            print(
                f"remainder: {format_polynomial(rep.remainder, style)}; "
                f"{rep.determinant_checks} determinant, {rep.recurrence_checks} recurrence, "
                f"{rep.lemma21_checks} cancellation checks passed",
                file=out,
            )
        else:
            print(f"verification FAILED for {rep.expression}", file=out)
    for msg in rep.failures:
        print(msg, file=err)
    return EXIT_OK if rep.passed else EXIT_FAILED


def _cmd_fuzz(args, out: TextIO, err: TextIO) -> int:
    try:
        cfg = FuzzConfig(
            trials=args.trials,
            max_degree=args.max_degree,
            coeff_bound=args.coeff_bound,
            seed=args.seed,
            allow_equal_degrees=args.allow_equal_degrees,
        )
    except ValueError as e:
        print(f"asympoly fuzz: {e}", file=err)
        return EXIT_USAGE
    report = run_campaign(cfg)
    if Style(args.format) is Style.JSON:
        print(report.to_json(), file=out)
    else:
        print(
            f"{report.trials_run} trials, {len(report.failures)} failures, "
            f"{report.determinant_checks} determinant checks, "
            f"{report.lemma21_checks} cancellation checks, {report.elapsed:.2f}s",
            file=out,
        )
    for rf, msg in report.failures:
        print(f"{rf}: {msg}", file=err)
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_bench(args, out: TextIO, err: TextIO) -> int:
    rows = run_bench(args.degrees, args.coeff_bound, args.seed, args.repeats)
    if Style(args.format) is Style.JSON:
        print(
            json.dumps(
                [
                    {
                        "degree": r.degree,
                        "k": r.k,
                        "method": r.method.value,
                        "seconds": r.seconds,
                        "peak_bits": r.peak_bits,
                    }
                    for r in rows
                ]
            ),
            file=out,
        )
    else:
        print(format_table(rows), file=out)
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "fuzz": _cmd_fuzz,
    "bench": _cmd_bench,
}


def run_cli(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out, err)
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        expr = getattr(args, "expression", None)
        if expr is not None:
            print(f"  {expr}\n  {' ' * e.position}^", file=err)
        return EXIT_USAGE
    except ZeroDivisionError as e:
        print(f"error: {e}", file=err)
        return EXIT_SEMANTIC


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
