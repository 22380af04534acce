"""Finite-difference ground truth for ``-psi'' + V psi = E psi``.

Three-point second differences on a uniform grid with Dirichlet ends give a
symmetric tridiagonal matrix.  Solving on spacings ``h`` and ``h/2`` and
combining ``(4 E_{h/2} - E_h)/3`` removes the ``O(h^2)`` error term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .catalog import PotentialSpec, exact_spectrum
from .errors import GridTooSmall
from .numerics import tridiag_eigen_lowest

# exp(-PENETRATION) is the WKB amplitude left at a soft boundary
PENETRATION = 22.0
WALL_OFFSET = 1e-6


@dataclass(frozen=True)
class GridSpec:
    x_lo: float
    x_hi: float
    points: int = 4000

    def __post_init__(self):
        if not self.x_lo < self.x_hi:
            raise ValueError(f"empty grid [{self.x_lo}, {self.x_hi}]")
        if self.points < 100:
            raise ValueError("need at least 100 grid points")

    @property
    def h(self) -> float:
        return (self.x_hi - self.x_lo) / (self.points + 1)

    def nodes(self) -> np.ndarray:
        return self.x_lo + self.h * np.arange(1, self.points + 1)

    def refined(self) -> "GridSpec":
        """Same box, half the spacing."""
        return GridSpec(self.x_lo, self.x_hi, 2 * self.points + 1)


@dataclass(frozen=True)
class OracleResult:
    levels: np.ndarray
    grid: GridSpec
    richardson_estimate: np.ndarray
    fine_levels: np.ndarray

    @property
    def richardson_gap(self) -> np.ndarray:
        """``|E_h - E_{h/2}|`` per level."""
        return np.abs(self.levels - self.fine_levels)


def _as_callable(potential):
    if isinstance(potential, PotentialSpec):
        spec = potential
        return lambda x: spec.W(x) ** 2 - spec.dW(x) - spec.v_minus_min
    return potential


def fd_levels(v: Callable, grid: GridSpec, k: int, vectors: bool = False):
    x = grid.nodes()
    h2 = grid.h ** 2
    with np.errstate(over="ignore"):
        diag = 2.0 / h2 + np.asarray(v(x), dtype=float)
    off = np.full(grid.points - 1, -1.0 / h2)
    return tridiag_eigen_lowest(diag, off, k, return_vectors=vectors)


def _check_support(vecs, walls):
    n = vecs.shape[0]
    edge = max(1, n // 100)
    for j in range(vecs.shape[1]):
        psi = np.abs(vecs[:, j])
        peak = psi.max()
        for side, sl in ((0, slice(0, edge)), (1, slice(n - edge, n))):
            if walls[side]:
                continue
            if psi[sl].max() > 1e-4 * peak:
                raise GridTooSmall(
                    f"eigenfunction {j} reaches the "
                    f"{'lower' if side == 0 else 'upper'} boundary; enlarge "
                    "the box")


def solve_schrodinger(potential, grid: GridSpec, k: int,
                      walls: tuple[bool, bool] | None = None) -> OracleResult:
    """Lowest ``k`` eigenvalues of ``-d^2/dx^2 + V`` on ``grid``.

    ``potential`` is a :class:`PotentialSpec` (its shifted ``V`` is used) or
    any vectorised callable.  ``walls`` marks ends where the Dirichlet
    condition is physical; the other ends must not carry eigenfunction
    weight.  For a spec it defaults to the finite ends of the domain, for a
    bare callable to ``(False, False)``.
    """
    if walls is None:
        if isinstance(potential, PotentialSpec):
            walls = (potential.is_wall(0), potential.is_wall(1))
        else:
            walls = (False, False)
    v = _as_callable(potential)
    coarse, vecs = fd_levels(v, grid, k, vectors=True)
    _check_support(vecs, walls)
    fine = fd_levels(v, grid.refined(), k)
    return OracleResult(np.asarray(coarse), grid, (4.0 * fine - coarse) / 3.0,
                        np.asarray(fine))


def _soft_edge(v, x_turn, end, e_top, scale):
    """March outward from a turning point until the decay exponent
    ``int sqrt(V - E) dx`` reaches PENETRATION."""
    step = 0.02 * scale
    sign = 1.0 if end > x_turn else -1.0
    x, acc = x_turn, 0.0
    while acc < PENETRATION:
        x_next = x + sign * step
        acc += step * math.sqrt(max(float(v(x_next)) - e_top, 0.0))
        x = x_next
        if abs(x - x_turn) > 1e5 * scale:
            raise GridTooSmall("decay region too long for a finite box")
    return x


def default_grid(spec: PotentialSpec, k: int, points: int = 4000) -> GridSpec:
    """Box holding the lowest ``k`` levels of ``spec``.

    Finite domain ends become Dirichlet walls (offset by a tiny fraction of
    the length scale); soft ends are pushed out until the WKB decay exponent
    at the level ``k - 1`` energy reaches PENETRATION.  The exact level is
    used for sizing only.
    """
    from .quantizers import turning_points_potential

    e_top = exact_spectrum(spec, k - 1)[-1].e_shifted
    tp = turning_points_potential(spec, e_top)
    v = _as_callable(spec)
    scale = spec.scale
    lo, hi = spec.domain
    bounds = []
    for end, turn in ((lo, tp.left), (hi, tp.right)):
        if math.isfinite(end):
            bounds.append(end - math.copysign(WALL_OFFSET * scale, end - turn))
        else:
            bounds.append(_soft_edge(v, turn, end, e_top, scale))
    return GridSpec(bounds[0], bounds[1], points)
