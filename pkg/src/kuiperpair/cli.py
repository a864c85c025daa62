"""Command-line interface: solves, tables, curves, data tests and simulation.

Exit codes are disjoint and stable: 0 success (or test acceptance),
1 numerical/solver error, 2 usage or data error, 3 statistical rejection.
All output is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence

from .empirical import (
    approximate_p_value,
    kuiper_statistic_one_sample,
    monte_carlo_exceedance,
    run_test,
)
from .errors import (
    EmptyInputError,
    KuiperError,
    OutOfRangeError,
    UnsortedInputError,
)
from .quantile import (
    DEFAULT_GUESS,
    IterationMethod,
    TestKind,
    kuiper_inv_cdf,
    kuiper_ltq,
    kuiper_pair_solver,
    kuiper_utq,
)

CURVE_P_MIN = 0.0002
CURVE_P_MAX = 0.9998

_KIND_BY_NAME = {"vn": TestKind.ONE_SAMPLE, "vnn": TestKind.TWO_SAMPLE_EQUAL}
_METHOD_BY_NAME = {"direct": IterationMethod.DIRECT, "newton": IterationMethod.NEWTON}


class _UsageError(Exception):
    """Flag/data problem that should exit with status 2."""


@dataclass(frozen=True)
class TableSpec:
    """Grid and formatting request for table generation."""

    alphas: tuple[float, ...]
    ns: tuple[int | float, ...]
    kind: TestKind
    format: str = "csv"
    decimals: int = 4

    def __post_init__(self) -> None:
        if not self.alphas or not self.ns:
            raise ValueError("alphas and ns must be nonempty")
        if self.format not in ("csv", "markdown"):
            raise ValueError(f"format must be csv or markdown, got {self.format!r}")
        if not 1 <= self.decimals <= 12:
            raise ValueError(f"decimals must lie in [1, 12], got {self.decimals}")


def round_half_away(value: float, decimals: int) -> float:
    """Round to ``decimals`` places with ties going away from zero."""
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def format_number(value: float, decimals: int) -> str:
    rounded = round_half_away(value, decimals)
    if rounded == 0.0:
        rounded = 0.0  # normalize -0.0
    return f"{rounded:.{decimals}f}"


def _format_n(n: int | float) -> str:
    return "inf" if math.isinf(n) else str(int(n))


def _parse_n(text: str) -> int | float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"n must be a positive integer or 'inf', got {text!r}"
        ) from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"n must be at least 1, got {value}")
    return value


def _parse_finite_n(text: str) -> int:
    value = _parse_n(text)
    if math.isinf(value):
        raise argparse.ArgumentTypeError("this command requires a finite n")
    return int(value)


def _parse_alpha(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"alpha must be a real number, got {text!r}") from None
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in (0, 1), got {value!r}")
    return value


def _parse_probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"p must be a real number, got {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"p must lie in [0, 1], got {value!r}")
    return value


def _parse_decimals(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"decimals must be an integer, got {text!r}") from None
    if not 1 <= value <= 12:
        raise argparse.ArgumentTypeError(f"decimals must lie in [1, 12], got {value}")
    return value


def _parse_alpha_list(text: str) -> tuple[float, ...]:
    items = [piece for piece in text.split(",") if piece.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of alphas")
    return tuple(_parse_alpha(piece) for piece in items)


def _parse_n_list(text: str) -> tuple[int | float, ...]:
    items = [piece for piece in text.split(",") if piece.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of ns")
    return tuple(_parse_n(piece) for piece in items)


def _read_data_file(path: str) -> list[float]:
    """One decimal number per line; '#' comment lines and blanks are skipped."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise _UsageError(f"cannot read data file {path!r}: {exc}") from exc
    values: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = float(line)
        except ValueError:
            raise _UsageError(
                f"{path}:{lineno}: not a decimal number: {line!r}"
            ) from None
        if not math.isfinite(value):
            raise _UsageError(f"{path}:{lineno}: non-finite value: {line!r}")
        values.append(value)
    if not values:
        raise _UsageError(f"data file {path!r} contains no values")
    return values


def _normal_cdf(x: float, mu: float, sigma: float) -> float:
    # Phi((x - mu)/sigma) through math.erf, exact to double precision.
    return 0.5 * (1.0 + math.erf((x - mu) / (sigma * math.sqrt(2.0))))


def _uniform_cdf(x: float, low: float, high: float) -> float:
    if x <= low:
        return 0.0
    if x >= high:
        return 1.0
    return (x - low) / (high - low)


def _probability_transform(values: list[float], args: argparse.Namespace) -> list[float]:
    if args.pit:
        for value in values:
            if not 0.0 <= value <= 1.0:
                raise _UsageError(
                    f"OutOfRange: --pit value {value!r} outside [0, 1]"
                )
        return list(values)
    dist = args.dist or "uniform"
    params = args.params if args.params is not None else (0.0, 1.0)
    first, second = params
    if dist == "uniform":
        if second <= first:
            raise _UsageError(
                f"uniform needs --params A B with B > A, got {first!r} {second!r}"
            )
        return [_uniform_cdf(x, first, second) for x in values]
    if second <= 0.0:
        raise _UsageError(f"normal needs a positive sigma, got {second!r}")
    return [_normal_cdf(x, first, second) for x in values]


def _solve_pair(alpha: float, n: int | float, kind: TestKind, method: IterationMethod,
                guess: float = DEFAULT_GUESS):
    return kuiper_pair_solver(guess, alpha, n, kind, method)


def cmd_pair(args: argparse.Namespace) -> int:
    pair = _solve_pair(
        args.alpha, args.n, _KIND_BY_NAME[args.test], _METHOD_BY_NAME[args.method],
        guess=args.guess,
    )
    c_text = format_number(pair.critical_value, args.decimals)
    v_text = format_number(pair.quantile, args.decimals)
    print(f"c={c_text} v={v_text}")
    return 0


def render_table(spec: TableSpec) -> tuple[str, list[str]]:
    """Render the table and return (text, list of per-cell failure notes)."""
    cells: dict[tuple[float, int | float], tuple[str, str]] = {}
    failures: list[str] = []
    for alpha in spec.alphas:
        for n in spec.ns:
            try:
                pair = _solve_pair(alpha, n, spec.kind, IterationMethod.NEWTON)
            except KuiperError as exc:
                cells[(alpha, n)] = ("NA", "NA")
                failures.append(
                    f"(alpha={alpha:g}, n={_format_n(n)}): {type(exc).__name__}"
                )
                continue
            cells[(alpha, n)] = (
                format_number(pair.critical_value, spec.decimals),
                format_number(pair.quantile, spec.decimals),
            )
    lines: list[str] = []
    if spec.format == "csv":
        lines.append("alpha,n,c,v")
        for alpha in spec.alphas:
            for n in spec.ns:
                c_text, v_text = cells[(alpha, n)]
                lines.append(f"{alpha:g},{_format_n(n)},{c_text},{v_text}")
    else:
        header = "| alpha | " + " | ".join(f"n={_format_n(n)}" for n in spec.ns) + " |"
        rule = "| --- |" + " --- |" * len(spec.ns)
        lines.append(header)
        lines.append(rule)
        for alpha in spec.alphas:
            row = [f"{alpha:g}"]
            for n in spec.ns:
                c_text, v_text = cells[(alpha, n)]
                row.append("NA" if c_text == "NA" else f"({c_text}, {v_text})")
            lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n", failures


def cmd_table(args: argparse.Namespace) -> int:
    spec = TableSpec(
        alphas=args.alphas,
        ns=args.ns,
        kind=_KIND_BY_NAME[args.test],
        format=args.format,
        decimals=args.decimals,
    )
    text, failures = render_table(spec)
    sys.stdout.write(text)
    if failures:
        print(f"{len(failures)} cell(s) unsolvable: " + "; ".join(failures),
              file=sys.stderr)
        return 1
    return 0


def cmd_utq(args: argparse.Namespace) -> int:
    print(format_number(kuiper_utq(args.alpha, args.n), args.decimals))
    return 0


def cmd_ltq(args: argparse.Namespace) -> int:
    print(format_number(kuiper_ltq(args.alpha, args.n), args.decimals))
    return 0


def cmd_invcdf(args: argparse.Namespace) -> int:
    print(format_number(kuiper_inv_cdf(args.p, args.n), args.decimals))
    return 0


def cmd_curve(args: argparse.Namespace) -> int:
    step = (CURVE_P_MAX - CURVE_P_MIN) / (args.points - 1)
    print("p,x")
    for index in range(args.points):
        p = CURVE_P_MIN + index * step
        try:
            cell = format_number(kuiper_inv_cdf(p, args.n), args.decimals)
        except KuiperError:
            cell = "NA"
        print(f"{p:g},{cell}")
    return 0


def cmd_test(args: argparse.Namespace) -> int:
    values = _read_data_file(args.data)
    try:
        probabilities = sorted(_probability_transform(values, args))
        result = kuiper_statistic_one_sample(probabilities)
    except (EmptyInputError, OutOfRangeError, UnsortedInputError) as exc:
        raise _UsageError(f"{type(exc).__name__}: {exc}") from exc
    decision = run_test(result, args.alpha, TestKind.ONE_SAMPLE)
    p_value = approximate_p_value(result)
    decimals = args.decimals
    print(f"n={result.n}")
    print(f"d_plus={format_number(result.d_plus, decimals)}")
    print(f"d_minus={format_number(result.d_minus, decimals)}")
    print(f"v={format_number(result.v, decimals)}")
    print(f"k={format_number(result.k, decimals)}")
    print(f"v_alpha={format_number(decision.quantile, decimals)}")
    print(f"p_value={format_number(p_value, decimals)}")
    print(f"decision={'REJECT' if decision.reject else 'ACCEPT'}")
    return 3 if decision.reject else 0


def cmd_simulate(args: argparse.Namespace) -> int:
    threshold = kuiper_utq(args.alpha, args.n)
    fraction = monte_carlo_exceedance(args.n, threshold, args.reps, args.seed)
    print(
        f"target={args.alpha:g} empirical={format_number(fraction, args.decimals)} "
        f"reps={args.reps} seed={args.seed}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--decimals", type=_parse_decimals, default=4,
        help="printed precision, 1-12 decimal places (default 4)",
    )

    parser = argparse.ArgumentParser(
        prog="kuiperpair",
        description="Critical values, tail quantiles and empirical statistics "
                    "for Kuiper's goodness-of-fit tests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pair = sub.add_parser("pair", parents=[shared],
                          help="solve the (critical value, quantile) pair")
    pair.add_argument("--alpha", type=_parse_alpha, required=True)
    pair.add_argument("--n", type=_parse_n, required=True,
                      help="sample size, or 'inf' for the large-sample limit")
    pair.add_argument("--test", choices=("vn", "vnn"), default="vn")
    pair.add_argument("--method", choices=("direct", "newton"), default="newton")
    pair.add_argument("--guess", type=float, default=DEFAULT_GUESS)
    pair.set_defaults(handler=cmd_pair)

    table = sub.add_parser("table", parents=[shared],
                           help="generate a critical-value/quantile table")
    table.add_argument("--alphas", type=_parse_alpha_list, required=True,
                       help="comma-separated significance levels")
    table.add_argument("--ns", type=_parse_n_list, required=True,
                       help="comma-separated sample sizes ('inf' allowed)")
    table.add_argument("--test", choices=("vn", "vnn"), default="vn")
    table.add_argument("--format", choices=("csv", "markdown"), default="csv")
    table.set_defaults(handler=cmd_table)

    utq = sub.add_parser("utq", parents=[shared], help="upper tail quantile")
    utq.add_argument("--alpha", type=float, required=True)
    utq.add_argument("--n", type=_parse_n, required=True)
    utq.set_defaults(handler=cmd_utq)

    ltq = sub.add_parser("ltq", parents=[shared], help="lower tail quantile")
    ltq.add_argument("--alpha", type=float, required=True)
    ltq.add_argument("--n", type=_parse_n, required=True)
    ltq.set_defaults(handler=cmd_ltq)

    invcdf = sub.add_parser("invcdf", parents=[shared],
                            help="inverse CDF of the one-sample statistic")
    invcdf.add_argument("--p", type=_parse_probability, required=True)
    invcdf.add_argument("--n", type=_parse_n, required=True)
    invcdf.set_defaults(handler=cmd_invcdf)

    curve = sub.add_parser("curve", parents=[shared],
                           help="emit p,x rows of the inverse CDF for plotting")
    curve.add_argument("--n", type=_parse_n, required=True)
    curve.add_argument("--points", type=int, required=True)
    curve.set_defaults(handler=cmd_curve)

    test = sub.add_parser("test", parents=[shared],
                          help="goodness-of-fit decision for a data file")
    test.add_argument("--data", required=True, help="file with one value per line")
    test.add_argument("--alpha", type=_parse_alpha, required=True)
    group = test.add_mutually_exclusive_group()
    group.add_argument("--dist", choices=("uniform", "normal"),
                       help="reference distribution for the probability transform")
    group.add_argument("--pit", action="store_true",
                       help="values are already probabilities in [0, 1]")
    test.add_argument("--params", type=float, nargs=2, metavar=("A", "B"),
                      help="distribution parameters: uniform bounds or normal mu sigma")
    test.set_defaults(handler=cmd_test)

    simulate = sub.add_parser("simulate", parents=[shared],
                              help="Monte Carlo check of a solved quantile")
    simulate.add_argument("--n", type=_parse_finite_n, required=True)
    simulate.add_argument("--alpha", type=_parse_alpha, required=True)
    simulate.add_argument("--reps", type=int, required=True)
    simulate.add_argument("--seed", type=int, required=True)
    simulate.add_argument("--test", choices=("vn",), default="vn")
    simulate.set_defaults(handler=cmd_simulate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already reported the problem
        return int(exc.code or 0)
    if args.command == "curve" and args.points < 2:
        print("error: --points must be at least 2", file=sys.stderr)
        return 2
    if args.command == "simulate" and (args.reps < 1):
        print("error: --reps must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KuiperError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
