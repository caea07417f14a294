"""Subcommand handlers and the argparse front end.

Machine-readable output goes to stdout (or --out/--csv files), diagnostics to
stderr. Exit codes: 0 success, 1 usage or failed check, 2 both lengths odd,
3 common factor, 4 numeric-mode errors.
"""

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

import structlog
from pydantic import ValidationError

from src.algebra.bezout import bezout_arrays, bezout_cosh, verify_identity
from src.algebra.cosh_basis import to_monomial
from src.algebra.oracle import gcd_oracle
from src.approx.continued_fraction import TargetValue
from src.approx.experiment import ExperimentReport, run_experiment
from src.cli.bench import bench
from src.cli.formatting import cosh_terms, describe, series_rows, write_csv, write_json
from src.config import (
    BENCH_REPETITIONS,
    DEFAULT_PLAN_GRID,
    DEFAULT_PLAN_ORDER,
    DEFAULT_SERIES_ORDER,
    DEFAULT_SIGMA,
    EXPERIMENT_JOBS,
    LOG_LEVEL,
    ORACLE_LIMIT,
    ROD_FLAT_PRECISION,
)
from src.exceptions import RodFlatError
from src.logging_config import configure_logging
from src.metrics import export_metrics
from src.planning.gevrey import GevreySpec
from src.planning.rest_to_rest import plan_rest_to_rest
from src.rod.flatness import controllability_rank, flat_output_from_bezout, is_flat_output, pairing_verdicts
from src.rod.folding import fold_tape, fold_tape_events
from src.rod.model import build_model
from src.schemas import (
    ApproxResult,
    ApproxRow,
    BenchResult,
    BenchRow,
    BezoutResult,
    DuplicateFindingRecord,
    FlatOutputResult,
    FoldEventRecord,
    FoldResult,
    PairingVerdictRecord,
    PlanSummary,
    RankResult,
    SeriesResult,
    StepRecord,
    TableFindingRecord,
    VerifyResult,
)
from src.series.numeric_mode import NumericMode
from src.series.operator_series import expand, normalize_pair

logger = structlog.get_logger(__name__)


def _mode(args) -> NumericMode:
    if getattr(args, "exact", False):
        return NumericMode.exact()
    if getattr(args, "digits", None) is not None:
        return NumericMode.from_digits(args.digits)
    return NumericMode.float_bits(ROD_FLAT_PRECISION)


def cmd_bezout(args) -> int:
    if args.arrays_only:
        problem, A1, A2 = bezout_arrays(args.a, args.b)
        write_csv(args.out, ["k", "L1", "L2"],
                  ([k, A1[k], A2[k] if k < len(A2) else 0] for k in range(len(A1))))
        return 0
    pair, trace = bezout_cosh(args.a, args.b)
    if not args.json:
        text = f"L1 = {describe(pair.L1)}\nL2 = {describe(pair.L2)}\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
        return 0
    result = BezoutResult(
        a=pair.problem.a,
        b=pair.problem.b,
        swapped=pair.swapped,
        L1=cosh_terms(pair.L1),
        L2=cosh_terms(pair.L2),
        k_sequence=trace.k_sequence() if args.trace else None,
        steps=[
            StepRecord(index=s.index, alpha=s.alpha.value, k=s.k, f=s.f, c=s.c, d=str(s.d))
            for s in trace.steps
        ] if args.trace else None,
    )
    write_json(result, args.out)
    return 0


def cmd_verify(args) -> int:
    pair, trace = bezout_cosh(args.a, args.b)
    residual_zero = verify_identity(pair).is_zero() and trace.satisfies_partial_sums()
    a, b = pair.problem.a, pair.problem.b
    checked = a + b <= ORACLE_LIMIT
    agrees = None
    if checked:
        _, U, V = gcd_oracle(a, b)
        agrees = to_monomial(pair.L1) == U and to_monomial(pair.L2) == V
    result = VerifyResult(a=a, b=b, residual_zero=residual_zero, oracle_checked=checked, oracle_agrees=agrees)
    write_json(result)
    if not result.ok:
        logger.error("Verification failed", a=a, b=b, residual_zero=residual_zero, oracle_agrees=agrees)
        return 1
    return 0


def cmd_series(args) -> int:
    mode = _mode(args)
    pair, _ = bezout_cosh(args.a, args.b)
    a, b = pair.problem.a, pair.problem.b
    s = Fraction(1, a)
    S1 = expand(pair.L1, s, args.order, mode)
    S2 = expand(pair.L2, s, args.order, mode)
    if args.normalize:
        S1, S2 = normalize_pair(S1, S2, Fraction(b, a))
    rows = series_rows(S1, S2)
    if args.json:
        write_json(SeriesResult(a=a, b=b, order=args.order, mode=mode.label,
                                normalized=args.normalize, rows=rows), args.out)
    else:
        write_csv(args.out, ["power", "L1_coeff", "L2_coeff"],
                  ([r.power, r.L1_coeff, r.L2_coeff] for r in rows))
    return 0


def _target(args) -> TargetValue:
    if args.sqrt is not None:
        return TargetValue(sqrt_of=args.sqrt)
    return TargetValue.parse(args.target)


def _experiment(args) -> ExperimentReport:
    return run_experiment(_target(args), args.count, args.order, _mode(args), args.jobs)


def _approx_result(report: ExperimentReport) -> ApproxResult:
    return ApproxResult(
        target=report.target,
        order=report.order,
        mode=report.mode.label,
        rows=[
            ApproxRow(a=r.a, b=r.b, seconds=r.seconds,
                      top_coefficient=report.mode.format(r.top_coefficient),
                      rows=series_rows(r.L1, r.L2), raw_rows=series_rows(r.raw_L1, r.raw_L2))
            for r in report.rows
        ],
        table_findings=[TableFindingRecord(**vars(f)) for f in report.table_findings],
        duplicate_findings=[
            DuplicateFindingRecord(fractions=list(f.fractions), published=f.published,
                                   computed_distinct=f.computed_distinct)
            for f in report.duplicate_findings
        ],
    )


def cmd_approx(args) -> int:
    report = _experiment(args)
    if args.json:
        write_json(_approx_result(report), args.out)
        return 0
    rows = []
    for r in report.rows:
        for row in series_rows(r.L1, r.L2):
            rows.append([r.a, r.b, row.power, row.L1_coeff, row.L2_coeff])
    write_csv(args.csv, ["a", "b", "power", "L1_coeff", "L2_coeff"], rows)
    return 0


def cmd_table(args) -> int:
    report = _experiment(args)
    power = 2 * args.order
    write_csv(args.csv, ["a", "b", f"L1_x{power}"],
              ([r.a, r.b, report.mode.format(r.top_coefficient)] for r in report.rows))
    for finding in report.table_findings:
        logger.info("Table comparison", fraction=finding.fraction, matching_digits=finding.matching_digits,
                    sign_agrees=finding.sign_agrees, exponent_shift=finding.exponent_shift)
    for finding in report.duplicate_findings:
        logger.warning("Published table repeats a value", fractions=finding.fractions,
                       computed_distinct=finding.computed_distinct)
    return 0


def cmd_flat_output(args) -> int:
    pair, _ = bezout_cosh(args.a, args.b)
    w = flat_output_from_bezout(pair, args.q)
    verdicts = None
    if args.check:
        verdicts = [PairingVerdictRecord(**vars(v)) for v in pairing_verdicts(args.a, args.b, args.q)]
    result = FlatOutputResult(a=pair.problem.a, b=pair.problem.b, q=args.q, weights=w.as_ints(),
                              verdicts=verdicts)
    if args.json:
        write_json(result)
    else:
        for node, weight in result.weights.items():
            sys.stdout.write(f"theta_{node}\t{weight}\n")
        for v in verdicts or []:
            sys.stdout.write(f"# {v.pairing} pairing: {'flat' if v.is_flat else 'not flat'}\n")
    if args.check:
        model = build_model(pair.problem.a, pair.problem.b, args.q)
        if not is_flat_output(model, w):
            logger.error("Flat output check failed", a=args.a, b=args.b, q=args.q)
            return 1
    return 0


def cmd_fold(args) -> int:
    counts = fold_tape(args.a, args.b)
    events = None
    if args.trace:
        events = [FoldEventRecord(move=e.move.value, position=e.position, length=e.length, layers=e.layers)
                  for e in fold_tape_events(args.a, args.b)]
    if args.json:
        write_json(FoldResult(a=min(args.a, args.b), b=max(args.a, args.b), counts=counts, events=events))
        return 0
    for e in events or []:
        sys.stdout.write(f"{e.move}\tat={e.position}\tlength={e.length}\tlayers={e.layers}\n")
    for border, count in counts.items():
        sys.stdout.write(f"border_{border}\t{count:+d}\n")
    return 0


def cmd_rank(args) -> int:
    model = build_model(min(args.a, args.b), max(args.a, args.b), args.q)
    rank = controllability_rank(model)
    result = RankResult(a=model.a, b=model.b, q=model.q, n=model.n, rank=rank, deficiency=model.n - rank)
    if args.json:
        write_json(result)
    else:
        sys.stdout.write(f"{rank}\n")
    return 0


def cmd_plan(args) -> int:
    spec = GevreySpec(sigma=args.sigma, T=args.time, theta_start=args.theta_start, theta_end=args.theta_end)
    plan = plan_rest_to_rest(args.a, args.b, spec, args.order, args.q, args.dt, args.grid)
    if args.csv:
        traj = plan.trajectory
        nodes = traj.theta.shape[1]
        u = traj.theta[:, args.q * args.a]
        write_csv(args.csv, ["t", "u"] + [f"theta_{i}" for i in range(nodes)],
                  ([repr(float(t)), repr(float(uk))] + [repr(float(v)) for v in row]
                   for t, uk, row in zip(traj.times, u, traj.theta)))
    write_json(PlanSummary(a=args.a, b=args.b, q=args.q, order=args.order, sigma=args.sigma, T=args.time,
                           dt=plan.dt, grid_points=args.grid, transfer_error=plan.transfer_error))
    return 0


def cmd_bench(args) -> int:
    report = bench(args.max_size, args.modes, args.repetitions, args.min_size)
    write_csv(args.csv, ["a", "b", "mode", "seconds"],
              ([r.a, r.b, r.mode, repr(r.seconds)] for r in report.rows))
    slopes = report.slopes()
    for mode, slope in slopes.items():
        logger.info("Log-log slope", mode=mode, slope=round(slope, 3))
    if args.json:
        write_json(BenchResult(rows=[BenchRow(**vars(r)) for r in report.rows], slopes=slopes), args.json)
    if args.metrics_out:
        with open(args.metrics_out, "wb") as handle:
            handle.write(export_metrics())
    return 0


def _pair_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("a", type=int, help="First length")
    p.add_argument("b", type=int, help="Second length")


def _mode_args(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", help="Exact rational coefficients")
    group.add_argument("--digits", type=int, default=None, help="Float mode carrying D decimal digits")


def _experiment_args(p: argparse.ArgumentParser) -> None:
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--sqrt", type=int, help="Approximate sqrt(N)")
    target.add_argument("--target", help="'sqrt(N)' or a decimal literal above 1")
    p.add_argument("--count", type=int, default=7, help="Number of kept convergents")
    p.add_argument("--order", type=int, default=10, help="Series order J")
    p.add_argument("--jobs", type=int, default=EXPERIMENT_JOBS, help="Worker processes")
    p.add_argument("--csv", default=None, help="CSV output file (default stdout)")
    _mode_args(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rodflat",
        description="Bézout identities of cosh operators and flatness of the discretized heat rod",
    )
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bezout", help="Cofactors L1, L2 with L1 cosh(ax) + L2 cosh(bx) = 1")
    _pair_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true", help="Include the step trace (with --json)")
    p.add_argument("--arrays-only", action="store_true", help="Dense CSV of the coefficient arrays")
    p.add_argument("--out", default=None, help="Write to a file instead of stdout")
    p.set_defaults(handler=cmd_bezout)

    p = sub.add_parser("verify", help="Check the identity and compare against extended Euclid")
    _pair_args(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("series", help="Power series of the cofactors after x -> x/a")
    _pair_args(p)
    p.add_argument("--order", type=int, default=DEFAULT_SERIES_ORDER)
    p.add_argument("--normalize", action="store_true", help="Make the constant term of L2 vanish")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    _mode_args(p)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("approx", help="Series for successive convergents of an irrational ratio")
    _experiment_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_approx)

    p = sub.add_parser("table", help="Degree-2J coefficient of normalized L1 per convergent")
    _experiment_args(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("flat-output", help="Flat output of the discretized rod")
    _pair_args(p)
    p.add_argument("--q", type=int, default=1, help="Intervals per unit length")
    p.add_argument("--check", action="store_true", help="Verify both index pairings exactly")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_flat_output)

    p = sub.add_parser("fold", help="Paper-tape folding counts")
    _pair_args(p)
    p.add_argument("--trace", action="store_true", help="Print the fold/cut event sequence")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_fold)

    p = sub.add_parser("rank", help="Exact rank of the controllability matrix")
    _pair_args(p)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_rank)

    p = sub.add_parser("plan", help="Rest-to-rest motion planning and simulation")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, default=None, help="Omit for a source at the end of the rod")
    p.add_argument("--sigma", type=float, default=DEFAULT_SIGMA)
    p.add_argument("--order", type=int, default=DEFAULT_PLAN_ORDER)
    p.add_argument("--time", type=float, default=1.0)
    p.add_argument("--q", type=int, default=20)
    p.add_argument("--dt", type=float, default=None, help="Time step (default: stability bound)")
    p.add_argument("--grid", type=int, default=DEFAULT_PLAN_GRID)
    p.add_argument("--theta-start", type=float, default=0.0)
    p.add_argument("--theta-end", type=float, default=1.0)
    p.add_argument("--csv", default=None, help="Trajectory CSV file")
    p.set_defaults(handler=cmd_plan)

    p = sub.add_parser("bench", help="Timing of the Bézout kernel on (2i, 2i+1)")
    p.add_argument("--max-size", type=int, default=200_000)
    p.add_argument("--min-size", type=int, default=10)
    p.add_argument("--modes", nargs="+", choices=["arrays", "series"], default=["arrays", "series"])
    p.add_argument("--repetitions", type=int, default=BENCH_REPETITIONS)
    p.add_argument("--csv", default=None)
    p.add_argument("--json", default=None, help="JSON report file")
    p.add_argument("--metrics-out", default=None, help="Prometheus exposition file")
    p.set_defaults(handler=cmd_bench)
    return parser


def dispatch(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the subcommand and map failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    configure_logging(level=args.log_level or LOG_LEVEL)
    try:
        return args.handler(args)
    except RodFlatError as e:
        logger.error(str(e), error=type(e).__name__)
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid input: {e}")
        sys.stderr.write(f"error: {e}\n")
        return 1
