"""Semiclassical quantisation (WKB, SWKB, Friedrich-Trost) of shape-invariant
potentials, checked against their exact spectra."""

from .catalog import (
    PotentialSpec,
    exact_energy,
    exact_spectrum,
    ground_state_wavefunction,
    list_families,
    make_spec,
    potential,
    remainder,
    v_minus,
    v_plus,
)
from .oracle import GridSpec, default_grid, solve_schrodinger
from .quantizers import (
    ft_phases,
    solve,
    solve_ft,
    solve_swkb,
    solve_wkb,
    swkb_action,
    turning_points_potential,
    turning_points_super,
    wkb_action,
)

__version__ = "0.1.0"

__all__ = [
    "PotentialSpec", "exact_energy", "exact_spectrum", "ground_state_wavefunction",
    "list_families", "make_spec", "potential", "remainder", "v_minus", "v_plus",
    "GridSpec", "default_grid", "solve_schrodinger",
    "ft_phases", "solve", "solve_ft", "solve_swkb", "solve_wkb", "swkb_action",
    "turning_points_potential", "turning_points_super", "wkb_action",
]
