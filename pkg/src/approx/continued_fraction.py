"""Continued-fraction convergents of square roots and finite decimals.

Partial quotients of sqrt(n) come from the exact periodic algorithm for
quadratic surds, so denominators of any size are safe.
"""

import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, List, Optional

import structlog
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.exceptions import NonQuadraticIrrationalUnsupportedError

logger = structlog.get_logger(__name__)

_SQRT_PATTERN = re.compile(r"^\s*sqrt\(\s*(\d+)\s*\)\s*$")


class TargetValue(BaseModel):
    """Length ratio to approximate: either sqrt(n) or a decimal literal greater than 1."""

    model_config = ConfigDict(frozen=True)

    sqrt_of: Optional[int] = Field(None, ge=2, description="Radicand n of sqrt(n), not a perfect square")
    decimal: Optional[str] = Field(None, description="Finite decimal literal")

    @model_validator(mode="after")
    def validate_target(self):
        """Exactly one form, non-square radicand, finite decimal above 1."""
        if (self.sqrt_of is None) == (self.decimal is None):
            raise ValueError("give exactly one of sqrt_of and decimal")
        if self.sqrt_of is not None and isqrt(self.sqrt_of) ** 2 == self.sqrt_of:
            raise ValueError(f"{self.sqrt_of} is a perfect square")
        if self.decimal is not None:
            try:
                value = Decimal(self.decimal)
            except InvalidOperation:
                raise ValueError(f"not a decimal literal: {self.decimal!r}")
            if not value.is_finite():
                raise ValueError("decimal literal must be finite")
            if value <= 1:
                raise ValueError("ratio b/a must exceed 1")
        return self

    @classmethod
    def parse(cls, text: str) -> "TargetValue":
        """Read 'sqrt(n)' or a decimal literal; any other expression is unsupported."""
        match = _SQRT_PATTERN.match(text)
        if match:
            return cls(sqrt_of=int(match.group(1)))
        try:
            Decimal(text.strip())
        except InvalidOperation:
            raise NonQuadraticIrrationalUnsupportedError(text)
        return cls(decimal=text.strip())

    @property
    def label(self) -> str:
        return f"sqrt({self.sqrt_of})" if self.sqrt_of is not None else self.decimal

    def __float__(self) -> float:
        if self.sqrt_of is not None:
            return self.sqrt_of ** 0.5
        return float(Decimal(self.decimal))


@dataclass(frozen=True)
class Convergent:
    """Convergent b/a of the expansion; b is the numerator."""

    numerator: int
    denominator: int
    index: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def both_odd(self) -> bool:
        return self.numerator % 2 == 1 and self.denominator % 2 == 1

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def partial_quotients(target: TargetValue) -> Iterator[int]:
    """Partial quotients; infinite (periodic) for sqrt, finite for decimals."""
    if target.sqrt_of is not None:
        n = target.sqrt_of
        a0 = isqrt(n)
        m, d, q = 0, 1, a0
        yield a0
        while True:
            m = d * q - m
            d = (n - m * m) // d
            q = (a0 + m) // d
            yield q
    else:
        frac = Fraction(Decimal(target.decimal))
        p, r = frac.numerator, frac.denominator
        while r:
            q, rem = divmod(p, r)
            yield q
            p, r = r, rem


def iter_convergents(target: TargetValue) -> Iterator[Convergent]:
    """p_i = q_i p_{i-1} + p_{i-2}, same for denominators."""
    p_prev, p = 0, 1
    d_prev, d = 1, 0
    for index, q in enumerate(partial_quotients(target)):
        p_prev, p = p, q * p + p_prev
        d_prev, d = d, q * d + d_prev
        yield Convergent(p, d, index)


def cf_expand(target: TargetValue, count: int) -> List[Convergent]:
    """First count convergents (fewer when a decimal expansion terminates)."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    out = []
    for conv in iter_convergents(target):
        out.append(conv)
        if len(out) == count:
            break
    return out


def parity_filter(cs: List[Convergent]) -> List[Convergent]:
    """Drop convergents whose numerator and denominator are both odd."""
    return [c for c in cs if not c.both_odd]


def convergents_until(target: TargetValue, filtered_count: int, max_terms: int = 10_000) -> List[Convergent]:
    """Extend the expansion until filtered_count parity-filtered convergents are found.

    Args:
        target: Ratio to approximate
        filtered_count: Number of kept convergents wanted
        max_terms: Upper bound on raw convergents examined

    Returns:
        Kept convergents in order of increasing denominator; shorter when a
        decimal expansion terminates first
    """
    if filtered_count < 1:
        raise ValueError(f"count must be positive, got {filtered_count}")
    kept: List[Convergent] = []
    for conv in iter_convergents(target):
        if conv.index >= max_terms:
            break
        if not conv.both_odd:
            kept.append(conv)
            if len(kept) == filtered_count:
                break
    logger.debug("Collected convergents", target=target.label, kept=len(kept))
    return kept


def recurrence_determinant(previous: Convergent, current: Convergent) -> int:
    """p_{i+1} q_i - p_i q_{i+1}, which is +1 or -1 for consecutive convergents."""
    return current.numerator * previous.denominator - previous.numerator * current.denominator


def is_reduced(conv: Convergent) -> bool:
    return gcd(conv.numerator, conv.denominator) == 1
