from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, log2
from typing import Optional

from mpmath.ctx_mp import MPContext
from mpmath.libmp import from_rational, round_nearest

from src.config import ROD_FLAT_PRECISION
from src.exceptions import NumericModeError


@lru_cache(maxsize=None)
def _context(bits: int) -> MPContext:
    ctx = MPContext()
    ctx.prec = bits
    return ctx


@dataclass(frozen=True)
class NumericMode:
    """exact (Fraction arithmetic) or float with a fixed significand size in bits."""

    kind: str = "exact"
    precision: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise NumericModeError(f"unknown numeric mode {self.kind!r}")
        if self.kind == "float" and (self.precision is None or self.precision < 53):
            raise NumericModeError(f"float precision must be >= 53 bits, got {self.precision}")
        if self.kind == "exact" and self.precision is not None:
            raise NumericModeError("exact mode takes no precision")

    @classmethod
    def exact(cls) -> "NumericMode":
        return cls("exact")

    @classmethod
    def float_bits(cls, bits: int = ROD_FLAT_PRECISION) -> "NumericMode":
        return cls("float", bits)

    @classmethod
    def from_digits(cls, digits: int) -> "NumericMode":
        """Enough bits to carry the requested number of decimal digits."""
        return cls("float", max(53, ceil(digits * log2(10)) + 1))

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def label(self) -> str:
        return "exact" if self.is_exact else f"float{self.precision}"

    @property
    def context(self) -> MPContext:
        if self.is_exact:
            raise NumericModeError("exact mode has no floating-point context")
        return _context(self.precision)

    def convert(self, value):
        """Bring an exact rational (or a float) into this mode, correctly rounded."""
        if self.is_exact:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise NumericModeError(f"exact mode needs rational input, got {type(value).__name__}")
        ctx = self.context
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            return ctx.make_mpf(from_rational(value.numerator, value.denominator, ctx.prec, round_nearest))
        return ctx.mpf(value)

    def zero(self):
        return self.convert(0)

    def one(self):
        return self.convert(1)

    def format(self, value) -> str:
        """Text form: num/den in exact mode, all significant digits in float mode."""
        if self.is_exact:
            return str(Fraction(value))
        digits = max(15, int(self.precision * 0.30103))
        return self.context.nstr(value, digits)
