"""
Rod Flatness Toolkit - Core Package

Linear-time Bézout identities for cosh operators (Chebyshev polynomials), their
power-series expansions along continued-fraction convergents, and flatness-based
analysis and motion planning of a discretized heat rod.
"""

from .algebra import BezoutPair, CoshPoly, bezout_cosh, verify_identity
from .series import NumericMode, OperatorSeries, expand, normalize_pair
from .rod import build_model, flat_output_from_bezout, is_flat_output

__version__ = "1.0.0"

__all__ = [
    # Algebra
    'BezoutPair',
    'CoshPoly',
    'bezout_cosh',
    'verify_identity',

    # Series
    'NumericMode',
    'OperatorSeries',
    'expand',
    'normalize_pair',

    # Rod
    'build_model',
    'flat_output_from_bezout',
    'is_flat_output'
]
