"""Closed forms of the five turning-point integrals

    I_k(a, b) = int_a^b  w_k(y) sqrt((y - a)(b - y)) dy

with weights ``w_1 = 1``, ``w_2 = 1/y``, ``w_3 = 1/(y^2 + 1)``,
``w_4 = 1/(1 - y^2)`` and ``w_5 = 1/(y^2 - 1)``.

Each closed form is rewritten so that the factor ``(b - a)^2`` is explicit.
This is algebraically identical to the textbook expression but avoids the
cancellation between O(1) terms when the limits nearly coincide, and it
makes ``I_k(c, c) == 0.0`` hold exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate

from .errors import DomainViolation

PI = math.pi

WEIGHTS = {
    1: lambda y: 1.0,
    2: lambda y: 1.0 / y,
    3: lambda y: 1.0 / (y * y + 1.0),
    4: lambda y: 1.0 / (1.0 - y * y),
    5: lambda y: 1.0 / (y * y - 1.0),
}


@dataclass(frozen=True)
class IntegralLimits:
    a: float
    b: float

    def __post_init__(self):
        if not self.a <= self.b:
            raise DomainViolation(f"need a <= b, got a={self.a}, b={self.b}")

    def check(self, kind: int) -> "IntegralLimits":
        a, b = self.a, self.b
        if kind == 2 and not a > 0:
            raise DomainViolation(f"I2 needs 0 < a, got a={a}")
        if kind == 4 and not (-1 < a and b < 1):
            raise DomainViolation(f"I4 needs -1 < a <= b < 1, got ({a}, {b})")
        if kind == 5 and not a > 1:
            raise DomainViolation(f"I5 needs 1 < a, got a={a}")
        return self

    @property
    def degenerate(self) -> bool:
        return self.a == self.b


def _limits(kind, a, b):
    return IntegralLimits(float(a), float(b)).check(kind)


def i1(a: float, b: float) -> float:
    """``pi (b - a)^2 / 8``."""
    lim = _limits(1, a, b)
    return PI * (lim.b - lim.a) ** 2 / 8.0


def i2(a: float, b: float) -> float:
    """``(pi/2)(a + b) - pi sqrt(ab)``, for ``0 < a <= b``."""
    lim = _limits(2, a, b)
    if lim.degenerate:
        return 0.0
    return 0.5 * PI * (math.sqrt(lim.b) - math.sqrt(lim.a)) ** 2


def i3(a: float, b: float) -> float:
    """``(pi/sqrt 2) [sqrt(1+a^2) sqrt(1+b^2) - ab + 1]^(1/2) - pi``."""
    lim = _limits(3, a, b)
    if lim.degenerate:
        return 0.0
    a, b = lim.a, lim.b
    r = math.sqrt((1.0 + a * a) * (1.0 + b * b))
    s = r - a * b + 1.0
    return PI * (b - a) ** 2 / (2.0 * (r + a * b + 1.0) * (math.sqrt(0.5 * s) + 1.0))


def i4(a: float, b: float) -> float:
    """``(pi/2) [2 - sqrt((1-a)(1-b)) - sqrt((1+a)(1+b))]``, for
    ``-1 < a <= b < 1``."""
    lim = _limits(4, a, b)
    if lim.degenerate:
        return 0.0
    a, b = lim.a, lim.b
    p = math.sqrt((1.0 - a) * (1.0 - b))
    q = math.sqrt((1.0 + a) * (1.0 + b))
    return PI * (b - a) ** 2 / ((2.0 + p + q) * (1.0 - a * b + p * q))


def i5(a: float, b: float) -> float:
    """``(pi/2) [sqrt((a+1)(b+1)) - sqrt((a-1)(b-1)) - 2]``, for
    ``1 < a <= b``."""
    lim = _limits(5, a, b)
    if lim.degenerate:
        return 0.0
    a, b = lim.a, lim.b
    p = math.sqrt((a - 1.0) * (b - 1.0))
    q = math.sqrt((a + 1.0) * (b + 1.0))
    return PI * (b - a) ** 2 / ((q - p + 2.0) * (a * b - 1.0 + p * q))


CLOSED_FORMS = {1: i1, 2: i2, 3: i3, 4: i4, 5: i5}


def textbook(kind: int, a: float, b: float) -> float:
    """The closed forms exactly as usually printed (no cancellation guard)."""
    _limits(kind, a, b)
    sq = math.sqrt
    if kind == 1:
        return PI / 8.0 * (b - a) ** 2
    if kind == 2:
        return PI / 2.0 * (a + b) - PI * sq(a * b)
    if kind == 3:
        return PI / sq(2.0) * sq(sq(1 + a * a) * sq(1 + b * b) - a * b + 1) - PI
    if kind == 4:
        return PI / 2.0 * (2 - sq((1 - a) * (1 - b)) - sq((1 + a) * (1 + b)))
    if kind == 5:
        return PI / 2.0 * (sq((a + 1) * (b + 1)) - sq((a - 1) * (b - 1)) - 2)
    raise ValueError(f"unknown integral I{kind}")


def by_quadrature(kind: int, a: float, b: float,
                  rel_tol: float = 1e-12) -> float:
    """Reference value from QUADPACK's QAWS rule.

    The ``sqrt((y - a)(b - y))`` factor is passed as an algebraic endpoint
    weight, so only the smooth ``w_k`` is sampled. This route shares nothing
    with :func:`shapeinv.numerics.integrate_turning`.
    """
    lim = _limits(kind, a, b)
    if lim.degenerate:
        return 0.0
    val, _ = integrate.quad(WEIGHTS[kind], lim.a, lim.b, weight="alg",
                            wvar=(0.5, 0.5), epsabs=0.0, epsrel=rel_tol,
                            limit=200)
    return val
