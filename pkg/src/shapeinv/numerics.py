"""Numerical kernels: bracketed root finding, turning-point quadrature,
central differences, golden-section minimisation and a tridiagonal
eigensolver.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate, linalg

from .errors import (
    DimensionMismatch,
    MaxIterations,
    NegativeIntegrand,
    NoSignChange,
    NonConvergence,
)

RealFunc = Callable[[float], float]

_EPS = np.finfo(float).eps
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Bracket:
    """An interval ``[lo, hi]`` on which ``f`` changes sign."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise NoSignChange(f"empty bracket [{self.lo}, {self.hi}]")
        if not (np.sign(self.f_lo) * np.sign(self.f_hi) < 0):
            raise NoSignChange(
                f"f({self.lo})={self.f_lo:g} and f({self.hi})={self.f_hi:g} "
                "do not have opposite signs"
            )

    @classmethod
    def of(cls, f: RealFunc, lo: float, hi: float) -> "Bracket":
        return cls(lo, hi, f(lo), f(hi))


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 60

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


@dataclass(frozen=True)
class RootInfo:
    root: float
    iterations: int
    width: float


def brent(f: RealFunc, bracket: Bracket, rel_tol: float = 1e-10,
          max_iter: int = 200) -> RootInfo:
    """Brent's method (bisection safeguarded inverse quadratic / secant).

    Terminates once the sign change of ``f`` is confined to an interval of
    width at most ``rel_tol * max(1, |x|)``.
    """
    a, b = bracket.lo, bracket.hi
    fa, fb = bracket.f_lo, bracket.f_hi
    if fa == 0.0:
        return RootInfo(a, 0, 0.0)
    if fb == 0.0:
        return RootInfo(b, 0, 0.0)
    c, fc = a, fa
    d = e = b - a
    for it in range(1, max_iter + 1):
        if np.sign(fb) == np.sign(fc):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        # b is the best estimate, [b, c] brackets the root
        tol = 0.5 * rel_tol * max(1.0, abs(b)) + 2.0 * _EPS * abs(b)
        m = 0.5 * (c - b)
        if abs(m) <= tol or fb == 0.0:
            return RootInfo(b, it, abs(c - b))
        if abs(e) >= tol and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            else:
                p = -p
            if 2.0 * p < min(3.0 * m * q - abs(tol * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m
        a, fa = b, fb
        b = b + d if abs(d) > tol else b + math.copysign(tol, m)
        fb = f(b)
    raise MaxIterations(f"Brent did not converge in {max_iter} iterations")


def find_root(f: RealFunc, bracket: Bracket, rel_tol: float = 1e-10) -> float:
    """Root of ``f`` inside ``bracket``.

    Raises:
        NoSignChange: the bracket is invalid (checked on construction).
        MaxIterations: tolerance not reached within 200 iterations.
    """
    return brent(f, bracket, rel_tol).root


def integrate_turning(f: RealFunc, a: float, b: float,
                      spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Integrate ``f`` over ``[a, b]`` where ``f`` vanishes like a square
    root at both ends.

    The substitution ``x = a + (b - a) sin^2(theta)`` turns a
    ``sqrt((x - a)(b - x)) * smooth`` integrand into a smooth function of
    ``theta`` on ``[0, pi/2]``, which adaptive Gauss-Kronrod then handles
    at full order.
    """
    if b < a:
        raise ValueError(f"need a <= b, got a={a}, b={b}")
    if a == b:
        return 0.0
    width = b - a

    def g(theta):
        s, c = math.sin(theta), math.cos(theta)
        x = a + width * s * s
        val = f(x)
        if not val >= -spec.abs_tol:  # also catches NaN
            raise NegativeIntegrand(f"integrand {val!r} at x={x!r}")
        return val * 2.0 * width * s * c

    return _quad(g, spec)


def _quad(g, spec):
    out = integrate.quad(g, 0.0, 0.5 * math.pi, epsabs=spec.abs_tol,
                         epsrel=spec.rel_tol, limit=spec.max_subdivisions,
                         full_output=1)
    value, err = out[0], out[1]
    if len(out) > 3:
        message = str(out[3])
        tol = max(spec.abs_tol, spec.rel_tol * abs(value))
        # a bare round-off warning is fine when the error estimate is sane
        if "subdivisions" in message or err > 10.0 * tol:
            raise NonConvergence(
                f"quadrature failed (err={err:.3g}, value={value:.12g}): "
                f"{message.splitlines()[0] if message else ''}")
    return value


def derivative(f: RealFunc, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def golden_minimize(f: RealFunc, lo: float, hi: float,
                    rel_tol: float = 1e-12, max_iter: int = 500) -> float:
    """Location of the minimum of a unimodal ``f`` on ``[lo, hi]``."""
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if abs(b - a) <= rel_tol * max(1.0, abs(c) + abs(d)) * 0.5:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return c if fc < fd else d


def tridiag_eigen_lowest(diag, offdiag, k: int, return_vectors: bool = False):
    """The ``k`` smallest eigenvalues of a symmetric tridiagonal matrix.

    Parameters
    ----------
    diag : sequence of float, length N
    offdiag : sequence of float, length N - 1
    k : int, 1 <= k <= N
    return_vectors : bool
        Also return the (N, k) array of eigenvectors.
    """
    d = np.asarray(diag, dtype=float)
    e = np.asarray(offdiag, dtype=float)
    if d.ndim != 1 or e.ndim != 1 or e.size != max(d.size - 1, 0):
        raise DimensionMismatch(
            f"diag has {d.size} entries, offdiag needs {d.size - 1}, "
            f"got {e.size}")
    if not 1 <= k <= d.size:
        raise DimensionMismatch(f"k={k} outside 1..{d.size}")
    if d.size == 1:
        vals = d.copy()
        return (vals, np.ones((1, 1))) if return_vectors else vals
    # LAPACK stebz/stein: Sturm-sequence bisection, then inverse iteration
    res = linalg.eigh_tridiagonal(d, e, eigvals_only=not return_vectors,
                                  select="i", select_range=(0, k - 1),
                                  lapack_driver="stebz")
    return res
