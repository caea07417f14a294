"""Convergent-by-convergent approximation of an irrational Bézout relation.

Every row is computed exactly (arrays, integer power sums, normalization) and
only converted to the requested numeric mode when the report is assembled, so
rows are reproducible whatever the worker count.
"""

import asyncio
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from src.algebra.bezout import bezout_arrays
from src.approx.continued_fraction import Convergent, TargetValue, convergents_until
from src.approx.reference import PUBLISHED_DEGREE_20
from src.config import EXPERIMENT_JOBS
from src.metrics import EXPERIMENT_ROW_DURATION
from src.series.numeric_mode import NumericMode
from src.series.operator_series import OperatorSeries, expand_arrays, normalize_pair

logger = structlog.get_logger(__name__)

_EXACT = NumericMode.exact()
TABLE_ORDER = 10


@dataclass(frozen=True)
class ExactRow:
    """Picklable result of one worker task."""

    a: int
    b: int
    order: int
    L1: Tuple[Fraction, ...]
    L2: Tuple[Fraction, ...]
    raw_L1: Tuple[Fraction, ...]
    raw_L2: Tuple[Fraction, ...]
    seconds: float


def compute_row(a: int, b: int, J: int) -> ExactRow:
    """Bézout arrays of (a, b), expanded with s = 1/a and normalized, all exact."""
    start = time.perf_counter()
    problem, A1, A2 = bezout_arrays(a, b)
    s = Fraction(1, problem.a)
    ratio = Fraction(problem.b, problem.a)
    S1 = expand_arrays(A1, s, J, _EXACT)
    S2 = expand_arrays(A2, s, J, _EXACT)
    N1, N2 = normalize_pair(S1, S2, ratio)
    return ExactRow(problem.a, problem.b, J, N1.sigma, N2.sigma, S1.sigma, S2.sigma,
                    time.perf_counter() - start)


@dataclass(frozen=True)
class ExperimentRow:
    a: int
    b: int
    order: int
    L1: OperatorSeries
    L2: OperatorSeries
    raw_L1: OperatorSeries
    raw_L2: OperatorSeries
    exact_top: Fraction
    seconds: float

    @property
    def fraction(self) -> str:
        return f"{self.b}/{self.a}"

    @property
    def top_coefficient(self):
        """Coefficient of x^(2J) in normalized L1, in the report's mode."""
        return self.L1.sigma[-1]


@dataclass(frozen=True)
class TableFinding:
    """Computed degree-2J coefficient of L1 against the published table entry."""

    fraction: str
    published: str
    computed: str
    matching_digits: int
    sign_agrees: bool
    exponent_shift: int


@dataclass(frozen=True)
class DuplicateFinding:
    """Published entries that coincide although their fractions differ."""

    fractions: Tuple[str, ...]
    published: str
    computed_distinct: bool


@dataclass
class ExperimentReport:
    target: str
    order: int
    mode: NumericMode
    rows: List[ExperimentRow] = field(default_factory=list)
    table_findings: List[TableFinding] = field(default_factory=list)
    duplicate_findings: List[DuplicateFinding] = field(default_factory=list)


def _split(value: Decimal) -> Tuple[int, str, int]:
    """(sign, significant digits, e) with |value| = 0.digits * 10^e."""
    sign, digits, _ = value.as_tuple()
    return (-1 if sign else 1), "".join(map(str, digits)), value.adjusted() + 1


def compare_with_published(value: Fraction, published: str) -> Tuple[str, int, bool, int]:
    """Significand agreement, sign agreement and exponent shift of value against a printed entry."""
    ref = Decimal(published)
    ref_sign, ref_digits, ref_exp = _split(ref)
    with localcontext() as ctx:
        ctx.prec = len(ref_digits)
        computed = Decimal(value.numerator) / Decimal(value.denominator)
    sign, digits, exp = _split(computed)
    matching = 0
    for u, v in zip(digits.ljust(len(ref_digits), "0"), ref_digits):
        if u != v:
            break
        matching += 1
    return str(computed), matching, sign == ref_sign, exp - ref_exp


def build_findings(rows: Sequence[ExperimentRow]) -> Tuple[List[TableFinding], List[DuplicateFinding]]:
    """Compare degree-20 rows with the published table and flag coinciding entries."""
    table: List[TableFinding] = []
    by_key: Dict[Tuple[int, int], ExperimentRow] = {(r.a, r.b): r for r in rows if r.order == TABLE_ORDER}
    for key, row in by_key.items():
        published = PUBLISHED_DEGREE_20.get(key)
        if published is None:
            continue
        computed, matching, sign_ok, shift = compare_with_published(row.exact_top, published)
        table.append(TableFinding(row.fraction, published, computed, matching, sign_ok, shift))

    groups: Dict[str, List[Tuple[int, int]]] = {}
    for key, published in PUBLISHED_DEGREE_20.items():
        groups.setdefault(published, []).append(key)
    duplicates: List[DuplicateFinding] = []
    for published, keys in groups.items():
        present = [k for k in keys if k in by_key]
        if len(keys) < 2 or len(present) < 2:
            continue
        values = {by_key[k].exact_top for k in present}
        duplicates.append(DuplicateFinding(
            tuple(by_key[k].fraction for k in present), published, len(values) > 1
        ))
    return table, duplicates


def _convert(values: Sequence[Fraction], J: int, mode: NumericMode, scale: Optional[Fraction]) -> OperatorSeries:
    return OperatorSeries(tuple(mode.convert(v) for v in values), J, mode, scale)


def _assemble(exact: ExactRow, mode: NumericMode) -> ExperimentRow:
    s = Fraction(1, exact.a)
    return ExperimentRow(
        a=exact.a,
        b=exact.b,
        order=exact.order,
        L1=_convert(exact.L1, exact.order, mode, s),
        L2=_convert(exact.L2, exact.order, mode, s),
        raw_L1=_convert(exact.raw_L1, exact.order, mode, s),
        raw_L2=_convert(exact.raw_L2, exact.order, mode, s),
        exact_top=exact.L1[-1],
        seconds=exact.seconds,
    )


class ExperimentRunner:
    """Runs experiment rows, in a process pool when more than one job is allowed."""

    def __init__(self, jobs: int = EXPERIMENT_JOBS):
        if jobs < 1:
            raise ValueError(f"jobs must be positive, got {jobs}")
        self.jobs = jobs
        logger.debug(f"ExperimentRunner initialized with {jobs} job(s)")

    async def run(self, convergents: Sequence[Convergent], J: int) -> List[ExactRow]:
        loop = asyncio.get_running_loop()
        pairs = [(c.denominator, c.numerator) for c in convergents]
        if self.jobs == 1:
            results = []
            for a, b in pairs:
                results.append(await loop.run_in_executor(None, compute_row, a, b, J))
            return results
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            tasks = [loop.run_in_executor(pool, compute_row, a, b, J) for a, b in pairs]
            return list(await asyncio.gather(*tasks))


async def run_experiment_async(
    target: TargetValue,
    count: int,
    J: int,
    mode: NumericMode,
    jobs: int = EXPERIMENT_JOBS,
) -> ExperimentReport:
    """Run the approximation experiment over the first count parity-filtered convergents.

    Args:
        target: Ratio to approximate
        count: Number of kept convergents
        J: Series order, the last coefficient is that of x^(2J)
        mode: Numeric mode of the reported coefficients
        jobs: Worker processes; 1 runs rows one after another

    Returns:
        Report with rows ordered by denominator
    """
    if J < 1:
        raise ValueError(f"order must be at least 1, got {J}")
    convergents = convergents_until(target, count)
    logger.info("Running approximation experiment", target=target.label,
                rows=len(convergents), order=J, mode=mode.label, jobs=jobs)
    try:
        exact_rows = await ExperimentRunner(jobs).run(convergents, J)
    except Exception as e:
        logger.error(f"Experiment for {target.label} failed: {e}", exc_info=True)
        raise

    rows = []
    for exact in sorted(exact_rows, key=lambda r: r.a):
        EXPERIMENT_ROW_DURATION.observe(exact.seconds)
        logger.info("Experiment row done", a=exact.a, b=exact.b, seconds=round(exact.seconds, 4))
        rows.append(_assemble(exact, mode))
    table, duplicates = build_findings(rows)
    return ExperimentReport(target.label, J, mode, rows, table, duplicates)


def run_experiment(target: TargetValue, count: int, J: int, mode: NumericMode,
                   jobs: int = EXPERIMENT_JOBS) -> ExperimentReport:
    """Synchronous wrapper around run_experiment_async."""
    return asyncio.run(run_experiment_async(target, count, J, mode, jobs))
