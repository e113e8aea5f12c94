"""Classification of x^2 y'' + a x y' + (b + c x^(2 beta)) y = 0.

Any equation of this family transforms into a Bessel equation: writing
s = (a - 1)/2, the substitution y = x^(-s) w(g x^beta) with
g = sqrt(c)/|beta| turns it into

    u^2 w'' + u w' + (u^2 - D) w = 0,      D = s^2 - b,

so the solution order is sqrt(D) when the discriminant D is nonnegative
(classical real order) and the order is pure imaginary with parameter
sqrt(-D)/|beta| otherwise, in which case the basis of this package
applies directly.  The prefactor exponent -s is real either way, even
though the order may not be.

Negative beta is accepted; its sign folds into the argument transform
x -> g x^beta, so the reported scale g and order stay nonnegative.
"""

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class RealOrder:
    """Classical Bessel order nu >= 0."""

    nu: float


@dataclass(frozen=True)
class ImaginaryOrder:
    """Pure imaginary Bessel order i*nu with nu > 0."""

    nu: float


@dataclass(frozen=True)
class LommelSolution:
    """Bessel form of a classified equation.

    Solutions are x^prefactor_exponent * w(gamma * x^beta) with w a
    Bessel-type function of the reported order.
    """

    prefactor_exponent: float
    gamma: float
    order: RealOrder | ImaginaryOrder


def classify(a: float, b: float, c: float, beta: float) -> LommelSolution:
    """Map coefficients (a, b, c, beta) to Bessel parameters.

    The discriminant ((a-1)/2)^2 - b decides the order type: nonnegative
    gives a real order (zero ties resolve to RealOrder(0)), negative an
    imaginary order.  Requires beta != 0 and c >= 0.
    """
    for name, value in (("a", a), ("b", b), ("c", c), ("beta", beta)):
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value!r}")
    if beta == 0.0:
        raise DomainError("beta must be nonzero")
    if c < 0.0:
        raise DomainError(f"c must be >= 0, got {c}")
    s = (a - 1.0) / 2.0
    disc = s * s - b
    scale = math.sqrt(c) / abs(beta)
    if disc >= 0.0:
        order: RealOrder | ImaginaryOrder = RealOrder(nu=math.sqrt(disc) / abs(beta))
    else:
        order = ImaginaryOrder(nu=math.sqrt(-disc) / abs(beta))
    return LommelSolution(prefactor_exponent=-s, gamma=scale, order=order)
