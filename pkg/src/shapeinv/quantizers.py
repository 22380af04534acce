"""Semiclassical quantisation conditions.

Three conditions are solved for the energy of level ``n``:

* ``wkb``  -- ``int_{x_L}^{x_R} sqrt(E - V) dx = (n + 1/2) pi``
* ``swkb`` -- ``int_{x'_L}^{x'_R} sqrt(E_- - W^2) dx = n pi`` with
  ``W(x'_L) = -sqrt(E_-)`` and ``W(x'_R) = +sqrt(E_-)``
* ``ft``   -- ``int sqrt(E - V) dx = (n + mu(E)/4) pi`` with reflection
  phases ``tan(phi_L/2) = -W(x_L)/k``, ``tan(phi_R/2) = W(x_R)/k`` and
  ``k = sqrt(E)``, ``mu = (phi_L + phi_R)/(pi/2)``.

``E`` lives on the shifted scale where ``min V = 0``; ``E_-`` on the ``V_-``
scale where the ground state sits at zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import integrals, numerics
from .catalog import PotentialSpec, outward
from .errors import (
    NegativeIntegrand,
    NonConvergence,
    NoTurningPoint,
    Unbound,
    ZeroEnergy,
)

PI = math.pi
METHODS = ("wkb", "swkb", "ft")

# action integrals are computed well below the 1e-10 default so that the
# energies inherit ~1e-11 relative accuracy
ACTION_QUAD = numerics.QuadratureSpec(rel_tol=1e-12, abs_tol=1e-14,
                                      max_subdivisions=100)
TURNING_TOL = 1e-14
ENERGY_TOL = 1e-13


@dataclass(frozen=True)
class TurningPair:
    left: float
    right: float
    kind: str  # "potential" or "superpotential"


@dataclass(frozen=True)
class PhasePair:
    phi_left: float
    phi_right: float

    @property
    def maslov(self) -> float:
        return (self.phi_left + self.phi_right) / (0.5 * PI)


WKB_PHASES = PhasePair(0.5 * PI, 0.5 * PI)


@dataclass(frozen=True)
class QuantizationResult:
    n: int
    energy: float
    energy_minus: float
    phases: PhasePair | None
    method: str
    iterations: int
    residual: float
    turning: TurningPair | None = None


# ---------------------------------------------------------------------------
# turning points


def _shifted_v(spec):
    w, dw, vmin = spec.W, spec.dW, spec.v_minus_min
    return lambda x: float(w(x) ** 2 - dw(x) - vmin)


def _crossing(f, x0, end, scale):
    """First point beyond ``x0`` (towards ``end``) where ``f`` turns
    positive, refined by Brent.  ``f(x0)`` must be negative."""
    prev = x0
    for x in outward(x0, end, scale):
        try:
            fx = f(x)
        except (OverflowError, ZeroDivisionError):
            break
        if fx > 0:
            a, b = sorted((prev, x))
            return numerics.find_root(f, numerics.Bracket.of(f, a, b),
                                      TURNING_TOL)
        if fx == 0:
            return x
        prev = x
    raise NoTurningPoint(f"no crossing between {x0} and {end}")


def turning_points_potential(spec: PotentialSpec, E: float) -> TurningPair:
    """Roots of ``V(x) = E`` on either side of the minimum of ``V``."""
    if not E > 0:
        raise NoTurningPoint(f"E={E} is not above the minimum of V")
    if E >= spec.continuum():
        raise NoTurningPoint(
            f"E={E} is at or above the continuum threshold {spec.continuum()}")
    v = _shifted_v(spec)
    f = lambda x: v(x) - E
    lo, hi = spec.domain
    xm = spec.x_at_min
    return TurningPair(_crossing(f, xm, lo, spec.scale),
                       _crossing(f, xm, hi, spec.scale), "potential")


def turning_points_super(spec: PotentialSpec, e_minus: float) -> TurningPair:
    """Points where ``W = -sqrt(e_minus)`` (left) and ``+sqrt(e_minus)``."""
    if e_minus < 0:
        raise NoTurningPoint(f"e_minus={e_minus} is negative")
    x0 = spec.w_zero
    if e_minus == 0:
        return TurningPair(x0, x0, "superpotential")
    root = math.sqrt(e_minus)
    w_lo, w_hi = spec.family.w_limits(spec.params)
    if root >= -w_lo or root >= w_hi:
        raise NoTurningPoint(
            f"sqrt(e_minus)={root} exceeds the asymptotic range of W")
    w = spec.W
    lo, hi = spec.domain
    left = _crossing(lambda x: -float(w(x)) - root, x0, lo, spec.scale)
    right = _crossing(lambda x: float(w(x)) - root, x0, hi, spec.scale)
    return TurningPair(left, right, "superpotential")


# ---------------------------------------------------------------------------
# action integrals


def _sqrt_radicand(rad, scale):
    if rad < 0:
        if rad < -1e-9 * max(1.0, scale):
            raise NegativeIntegrand(f"radicand {rad!r} inside turning points")
        return 0.0
    return math.sqrt(rad)


def wkb_action(spec: PotentialSpec, E: float, tp: TurningPair | None = None,
               quad: numerics.QuadratureSpec = ACTION_QUAD) -> float:
    """``int_{x_L}^{x_R} sqrt(E - V(x)) dx``."""
    if tp is None:
        tp = turning_points_potential(spec, E)
    v = _shifted_v(spec)
    return numerics.integrate_turning(
        lambda x: _sqrt_radicand(E - v(x), E), tp.left, tp.right, quad)


def swkb_action(spec: PotentialSpec, e_minus: float,
                tp: TurningPair | None = None,
                quad: numerics.QuadratureSpec = ACTION_QUAD) -> float:
    """``int_{x'_L}^{x'_R} sqrt(e_minus - W(x)^2) dx``."""
    if e_minus == 0:
        return 0.0
    if tp is None:
        tp = turning_points_super(spec, e_minus)
    w = spec.W
    return numerics.integrate_turning(
        lambda x: _sqrt_radicand(e_minus - float(w(x)) ** 2, e_minus),
        tp.left, tp.right, quad)


def ft_phases(spec: PotentialSpec, E: float, tp: TurningPair) -> PhasePair:
    """Reflection phases from the superpotential at the turning points.

    Principal-branch arctangents; negative phases are reported as is.
    """
    if not E > 0:
        raise ZeroEnergy(f"E={E}: the phases need k = sqrt(E) > 0")
    k = math.sqrt(E)
    return PhasePair(2.0 * math.atan(-float(spec.W(tp.left)) / k),
                     2.0 * math.atan(float(spec.W(tp.right)) / k))


# ---------------------------------------------------------------------------
# solvers


def _bracket_around(g, guess, upper):
    """Walk out from ``guess`` until ``g`` changes sign.  ``g`` is increasing
    on ``(0, upper)``; raises Unbound if no sign change exists below
    ``upper``."""
    if not guess < upper:
        guess = 0.5 * upper
    e0 = guess
    g0 = g(e0)
    if g0 == 0:
        return e0, e0
    e = e0
    for _ in range(200):
        if g0 < 0:
            e_next = 2.0 * e if math.isinf(upper) else e + 0.5 * (upper - e)
            if not e_next < upper or e_next == e:
                break
        else:
            e_next = 0.5 * e
            if e_next <= 0 or e_next < 1e-14 * e0:
                break
        try:
            g_next = g(e_next)
        except NoTurningPoint:
            break
        if (g_next > 0) != (g0 > 0) or g_next == 0:
            return tuple(sorted((e, e_next)))
        e = e_next
    raise Unbound(f"no sign change found starting from E={guess}")


def _solve(g, guess, upper, rel_tol):
    lo, hi = _bracket_around(g, guess, upper)
    if lo == hi:
        return lo, 0
    try:
        info = numerics.brent(g, numerics.Bracket.of(g, lo, hi), rel_tol)
    except NoTurningPoint as exc:  # pragma: no cover - bracket is interior
        raise NonConvergence(str(exc)) from exc
    return info.root, info.iterations


def _check_level(spec, n):
    if not spec.has_level(n):
        raise Unbound(f"{spec.family_id} has only {spec.max_level} bound "
                      f"state(s); level n={n} does not exist")


def _seed(spec, n):
    """Harmonic estimate ``(2n + 1) sqrt(V''(x_min) / 2)`` of level ``n``.

    Only used to start the bracket search; it keeps the solvers independent
    of the exact spectrum they are compared against.
    """
    v = _shifted_v(spec)
    h = 1e-3 * spec.scale
    xm = spec.x_at_min
    curv = (v(xm + h) - 2.0 * v(xm) + v(xm - h)) / (h * h)
    guess = (2 * n + 1) * math.sqrt(max(curv, 1e-12) / 2.0)
    return min(guess, 0.9 * spec.continuum())


def solve_wkb(spec: PotentialSpec, n: int, quad=ACTION_QUAD,
              rel_tol: float = ENERGY_TOL) -> QuantizationResult:
    """Level ``n`` from the standard condition (Maslov index 2)."""
    _check_level(spec, n)
    target = (n + 0.5) * PI
    g = lambda E: wkb_action(spec, E, quad=quad) - target
    E, its = _solve(g, _seed(spec, n), spec.continuum(), rel_tol)
    return QuantizationResult(n, E, E + spec.v_minus_min, WKB_PHASES, "wkb",
                              its, abs(g(E)), turning_points_potential(spec, E))


def solve_swkb(spec: PotentialSpec, n: int, quad=ACTION_QUAD,
               rel_tol: float = ENERGY_TOL) -> QuantizationResult:
    """Level ``n`` from the superpotential condition.

    ``n = 0`` is returned as ``E_- = 0`` without a root search: the two
    turning points coincide at the zero of W and the action vanishes.
    """
    _check_level(spec, n)
    if n == 0:
        return QuantizationResult(
            0, -spec.v_minus_min, 0.0, None, "swkb", 0, 0.0,
            turning_points_super(spec, 0.0))
    target = n * PI
    g = lambda e: swkb_action(spec, e, quad=quad) - target
    upper = spec.continuum() + spec.v_minus_min
    seed = _seed(spec, n) + spec.v_minus_min
    e, its = _solve(g, seed if seed > 0 else -spec.v_minus_min, upper,
                    rel_tol)
    return QuantizationResult(n, e - spec.v_minus_min, e, None, "swkb", its,
                              abs(g(e)), turning_points_super(spec, e))


def ft_mismatch(spec: PotentialSpec, n: int, E: float,
                quad=ACTION_QUAD) -> float:
    """``action(E) - (n + mu(E)/4) pi``; zero at the FT level."""
    tp = turning_points_potential(spec, E)
    mu = ft_phases(spec, E, tp).maslov
    return wkb_action(spec, E, tp, quad) - (n + 0.25 * mu) * PI


def solve_ft(spec: PotentialSpec, n: int, quad=ACTION_QUAD,
             rel_tol: float = ENERGY_TOL) -> QuantizationResult:
    """Level ``n`` with energy-dependent phases taken at the level's own
    energy, solved as one root search on :func:`ft_mismatch`."""
    _check_level(spec, n)
    g = lambda E: ft_mismatch(spec, n, E, quad)
    E, its = _solve(g, _seed(spec, n), spec.continuum(), rel_tol)
    tp = turning_points_potential(spec, E)
    return QuantizationResult(n, E, E + spec.v_minus_min,
                              ft_phases(spec, E, tp), "ft", its, abs(g(E)), tp)


SOLVERS = {"wkb": solve_wkb, "swkb": solve_swkb, "ft": solve_ft}


def solve(spec: PotentialSpec, n: int, method: str,
          **kwargs) -> QuantizationResult:
    try:
        solver = SOLVERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; use one of {METHODS}")
    return solver(spec, n, **kwargs)


# ---------------------------------------------------------------------------
# Rosen-Morse II in closed form (y = tanh(alpha x))


def _rm2(spec):
    if spec.family_id != "rosen_morse_2":
        raise ValueError("closed forms are for rosen_morse_2 only")
    p = spec.params
    return p["A"], p["B"], p["alpha"]


def rm2_wkb_action(spec: PotentialSpec, E: float) -> float:
    """``sqrt(A(A+alpha))/alpha * I4(y_L, y_R)`` where ``y_{L,R}`` solve
    ``A(A+alpha) y^2 + 2 B y + B^2/(A(A+alpha)) - E = 0``."""
    A, B, al = _rm2(spec)
    c = A * (A + al)
    disc = B * B - c * (B * B / c - E)
    if disc < 0:
        raise NoTurningPoint(f"E={E} below the minimum")
    s = math.sqrt(disc)
    return math.sqrt(c) / al * integrals.i4((-B - s) / c, (-B + s) / c)


def rm2_swkb_action(spec: PotentialSpec, e_minus: float) -> float:
    """``(A/alpha) I4(y'_L, y'_R)`` with ``A y' + B/A = -+sqrt(e_minus)``."""
    A, B, al = _rm2(spec)
    r = math.sqrt(e_minus)
    return A / al * integrals.i4((-r - B / A) / A, (r - B / A) / A)


def rm2_wkb_energy(A: float, B: float, alpha: float, n: int) -> float:
    """WKB level on the shifted scale, solved in closed form."""
    c = A * (A + alpha)
    m = math.sqrt(c) - 0.5 * alpha - n * alpha
    return c - m * m + B * B / c - B * B / (m * m)


def rm2_swkb_energy(A: float, B: float, alpha: float, n: int) -> float:
    """SWKB level on the ``V_-`` scale (coincides with the exact one)."""
    m = A - n * alpha
    return A * A - m * m + B * B / (A * A) - B * B / (m * m)
