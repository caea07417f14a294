import time
from contextlib import contextmanager
from typing import Iterator

from prometheus_client import CollectorRegistry, Counter, Histogram, generate_latest
import structlog

logger = structlog.get_logger(__name__)

registry = CollectorRegistry()

# Define metrics
BEZOUT_DURATION = Histogram(
    'rodflat_bezout_duration_seconds',
    'Wall time of one Bézout computation',
    ['mode'],
    buckets=(1e-5, 1e-4, 1e-3, 1e-2, 0.1, 0.5, 1.0, 5.0, 30.0, 120.0),
    registry=registry
)

REJECTED_PROBLEMS = Counter(
    'rodflat_rejected_problems_total',
    'Bézout problems rejected before computation',
    ['reason'],
    registry=registry
)

EXPERIMENT_ROW_DURATION = Histogram(
    'rodflat_experiment_row_seconds',
    'Wall time of one convergent row of the approximation experiment',
    buckets=(1e-3, 1e-2, 0.1, 1.0, 10.0, 60.0, 600.0),
    registry=registry
)


@contextmanager
def timed(histogram: Histogram, **labels: str) -> Iterator[dict]:
    """Observe the wall time of the enclosed block.

    Args:
        histogram: Histogram to observe into
        labels: Label values, if the histogram is labelled

    Yields:
        Dict whose "seconds" entry is filled when the block exits
    """
    result = {"seconds": 0.0}
    start_time = time.perf_counter()
    try:
        yield result
    finally:
        result["seconds"] = time.perf_counter() - start_time
        target = histogram.labels(**labels) if labels else histogram
        target.observe(result["seconds"])


def export_metrics() -> bytes:
    """Prometheus text exposition of the package registry."""
    return generate_latest(registry)
