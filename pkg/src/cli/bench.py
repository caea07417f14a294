"""Timing harness for the Bézout kernel on (2i, 2i+1)."""

import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

import numpy as np
import structlog

from src.algebra.bezout import BezoutProblem, bezout_arrays, cofactor_arrays
from src.config import BENCH_REPETITIONS, ROD_FLAT_PRECISION
from src.metrics import BEZOUT_DURATION, timed
from src.series.numeric_mode import NumericMode
from src.series.operator_series import expand_arrays

logger = structlog.get_logger(__name__)

SERIES_ORDER = 20


@dataclass(frozen=True)
class BenchRow:
    a: int
    b: int
    mode: str
    seconds: float


@dataclass
class BenchReport:
    rows: List[BenchRow] = field(default_factory=list)

    def slope(self, mode: str) -> float:
        """Slope of log(time) against log(a+b) for one mode."""
        picked = [r for r in self.rows if r.mode == mode and r.seconds > 0]
        if len(picked) < 2:
            raise ValueError(f"need at least two timed rows for mode {mode!r}")
        x = np.log([r.a + r.b for r in picked])
        y = np.log([r.seconds for r in picked])
        return float(np.polyfit(x, y, 1)[0])

    def slopes(self) -> Dict[str, float]:
        modes = sorted({r.mode for r in self.rows})
        return {m: self.slope(m) for m in modes if sum(r.mode == m for r in self.rows) >= 2}


def bench_sizes(max_size: int, min_size: int = 10) -> List[int]:
    """Geometrically spaced i with 4i + 1 = a + b between min_size and max_size."""
    if max_size < 10:
        raise ValueError(f"max_size must be at least 10, got {max_size}")
    sizes = []
    i = max(2, min_size // 4)
    while 4 * i + 1 <= max_size:
        sizes.append(i)
        i *= 2
    return sizes


def _series_kernel(a: int, b: int) -> None:
    with timed(BEZOUT_DURATION, mode="series"):
        problem, _ = BezoutProblem.create(a, b)
        A1, A2 = cofactor_arrays(problem)
        mode = NumericMode.float_bits(ROD_FLAT_PRECISION)
        s = Fraction(1, problem.a)
        expand_arrays(A1, s, SERIES_ORDER, mode)
        expand_arrays(A2, s, SERIES_ORDER, mode)


def _kernel(mode: str) -> Callable[[int, int], None]:
    if mode == "arrays":
        return lambda a, b: bezout_arrays(a, b)
    return _series_kernel


def _median_time(fn: Callable[[int, int], None], a: int, b: int, repetitions: int) -> float:
    fn(a, b)
    times = []
    for _ in range(repetitions):
        start = time.perf_counter()
        fn(a, b)
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def bench(max_size: int, modes: Sequence[str] = ("arrays", "series"),
          repetitions: int = BENCH_REPETITIONS, min_size: int = 10) -> BenchReport:
    """Median wall time per size and mode, after one warm-up run.

    Args:
        max_size: Largest a + b
        modes: "arrays" and/or "series" (order 20)
        repetitions: Timed runs per row, at least 3
        min_size: Smallest a + b

    Returns:
        Rows ordered by mode then size
    """
    if repetitions < 3:
        raise ValueError(f"need at least 3 repetitions, got {repetitions}")
    report = BenchReport()
    for mode in modes:
        label = "arrays" if mode == "arrays" else f"series{SERIES_ORDER}"
        kernel = _kernel(mode)
        for i in bench_sizes(max_size, min_size):
            a, b = 2 * i, 2 * i + 1
            seconds = _median_time(kernel, a, b, repetitions)
            report.rows.append(BenchRow(a, b, label, seconds))
            logger.info("Bench row", a=a, b=b, mode=label, seconds=seconds)
    return report
