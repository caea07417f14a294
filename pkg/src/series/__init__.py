from src.series.numeric_mode import NumericMode
from src.series.operator_series import (
    OperatorSeries,
    constant_series,
    cosh_series,
    expand,
    expand_arrays,
    expand_items,
    identity_residual,
    normalize_pair,
    series_mul,
)

__all__ = [
    "NumericMode",
    "OperatorSeries",
    "constant_series",
    "cosh_series",
    "expand",
    "expand_arrays",
    "expand_items",
    "identity_residual",
    "normalize_pair",
    "series_mul",
]
