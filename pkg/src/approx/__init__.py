from src.approx.continued_fraction import (
    Convergent,
    TargetValue,
    cf_expand,
    convergents_until,
    iter_convergents,
    parity_filter,
)
from src.approx.experiment import (
    ExperimentReport,
    ExperimentRow,
    compute_row,
    run_experiment,
    run_experiment_async,
)

__all__ = [
    "Convergent",
    "TargetValue",
    "cf_expand",
    "convergents_until",
    "iter_convergents",
    "parity_filter",
    "ExperimentReport",
    "ExperimentRow",
    "compute_row",
    "run_experiment",
    "run_experiment_async",
]
