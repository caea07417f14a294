"""Exception hierarchy shared by the library and the command line."""

from typing import Optional


class RodFlatError(Exception):
    """Base class for every error raised by the package."""

    exit_code: int = 1


class BothOddError(RodFlatError):
    """GCD(T_a, T_b) is nontrivial: no Bézout identity exists."""

    exit_code = 2

    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b
        super().__init__(
            f"a={a} and b={b} are both odd: T_{a} and T_{b} share the factor "
            f"of the torsion mode cos(pi x/2), the rod is not controllable"
        )


class CommonFactorError(RodFlatError):
    """a and b share a factor; the caller must rescale the lengths first."""

    exit_code = 3

    def __init__(self, a: int, b: int, g: int):
        self.a = a
        self.b = b
        self.g = g
        super().__init__(
            f"gcd({a}, {b}) = {g}: rescale both lengths by {g} before computing the identity"
        )


class NumericModeError(RodFlatError):
    """Invalid numeric mode or precision."""

    exit_code = 4


class ModeMismatchError(NumericModeError):
    """Two series do not share order and numeric mode."""

    def __init__(self, left: str, right: str):
        super().__init__(f"series mismatch: {left} vs {right}")


class NonQuadraticIrrationalUnsupportedError(RodFlatError):
    """Only square roots and finite decimals can be expanded exactly."""

    def __init__(self, expression: str):
        self.expression = expression
        super().__init__(
            f"cannot expand {expression!r}: only sqrt(n) and decimal literals are supported"
        )


class OrderMismatchError(RodFlatError):
    """Operator series is longer than the available derivative jet."""

    def __init__(self, order: int, available: Optional[int]):
        super().__init__(
            f"operator of order {order} needs {order + 1} derivatives, jet has {available}"
        )


class UnstableStepError(RodFlatError):
    """Explicit time step exceeds the stability bound of the integrator."""

    def __init__(self, dt: float, bound: float):
        self.dt = dt
        self.bound = bound
        super().__init__(f"dt={dt:g} exceeds the stability bound {bound:g}")
