import math

import numpy as np
import pytest

from shapeinv import catalog, quantizers
from shapeinv.errors import NoTurningPoint, Unbound, ZeroEnergy
from shapeinv.quantizers import TurningPair

PI = math.pi


# -- turning points --------------------------------------------------------

def test_turning_points_harmonic(sho):
    tp = quantizers.turning_points_potential(sho, 4.0)
    assert (tp.left, tp.right) == pytest.approx((-2.0, 2.0), abs=1e-12)
    tp = quantizers.turning_points_super(sho, 4.0)
    assert (tp.left, tp.right) == pytest.approx((-2.0, 2.0), abs=1e-12)


def test_turning_points_morse():
    spec = catalog.make_spec("morse", {"A": 2.0, "B": 1.0, "alpha": 1.0})
    tp = quantizers.turning_points_potential(spec, 1.0)
    assert tp.left < spec.x_at_min < tp.right
    for x in (tp.left, tp.right):
        assert catalog.potential(spec, x) == pytest.approx(1.0, abs=1e-10)


def test_turning_points_collapse_at_minimum(rm2):
    tp = quantizers.turning_points_potential(rm2, 1e-10)
    assert math.tanh(tp.left) == pytest.approx(-1 / 6, abs=1e-4)
    assert math.tanh(tp.right) == pytest.approx(-1 / 6, abs=1e-4)


def test_super_turning_points_rm2(rm2):
    A, B = 2.0, 1.0
    spec = catalog.make_spec("rosen_morse_2", {"A": 6.0, "B": 2.0, "alpha": 1.0})
    e1 = catalog.exact_spectrum(spec, 1)[1].e_minus
    tp = quantizers.turning_points_super(spec, e1)
    root = math.sqrt(e1)
    assert math.tanh(tp.left) == pytest.approx((-root - 2.0 / 6.0) / 6.0, abs=1e-12)
    assert math.tanh(tp.right) == pytest.approx((root - 2.0 / 6.0) / 6.0, abs=1e-12)
    tp0 = quantizers.turning_points_super(rm2, 0.0)
    assert tp0.left == tp0.right == rm2.w_zero
    assert math.tanh(rm2.w_zero) == pytest.approx(-B / A**2, abs=1e-12)


def test_no_turning_point(rm2):
    with pytest.raises(NoTurningPoint):
        quantizers.turning_points_potential(rm2, 0.0)
    with pytest.raises(NoTurningPoint):
        quantizers.turning_points_potential(rm2, rm2.continuum() + 0.1)
    with pytest.raises(NoTurningPoint):
        quantizers.turning_points_super(rm2, -1.0)


# -- actions ---------------------------------------------------------------

@pytest.mark.parametrize("E", [0.5, 1.0, 4.0, 17.0])
def test_harmonic_actions(sho, E):
    assert quantizers.wkb_action(sho, E) == pytest.approx(PI * E / 2, rel=1e-11)
    assert quantizers.swkb_action(sho, E) == pytest.approx(PI * E / 2, rel=1e-11)


def test_swkb_action_zero(rm2):
    assert quantizers.swkb_action(rm2, 0.0) == 0.0


def test_rm2_wkb_action_near_half_pi(rm2):
    assert quantizers.wkb_action(rm2, 2.103) == pytest.approx(0.5 * PI, rel=1e-3)


def test_swkb_action_at_exact_level_is_n_pi():
    spec = catalog.make_spec("rosen_morse_2", {"A": 6.0, "B": 2.0, "alpha": 1.0})
    for n in (1, 2, 3):
        e = catalog.exact_spectrum(spec, n)[-1].e_minus
        assert quantizers.swkb_action(spec, e) == pytest.approx(n * PI, rel=1e-11)


@pytest.mark.parametrize("fid", catalog.list_families())
def test_actions_increase_with_energy(fid):
    spec = catalog.make_spec(fid)
    top = catalog.exact_energy(spec, 2)
    energies = np.linspace(0.05, 1.0, 12) * min(top, 0.99 * spec.continuum())
    wkb = [quantizers.wkb_action(spec, E) for E in energies]
    swkb = [quantizers.swkb_action(spec, E + spec.v_minus_min)
            for E in energies if E + spec.v_minus_min > 0]
    assert np.all(np.diff(wkb) > 0)
    assert np.all(np.diff(swkb) > 0)


def test_rm2_closed_form_actions():
    spec = catalog.make_spec("rosen_morse_2", {"A": 6.0, "B": 2.0, "alpha": 1.0})
    for E in (2.0, 8.0, 15.0):
        assert quantizers.rm2_wkb_action(spec, E) == pytest.approx(
            quantizers.wkb_action(spec, E), rel=1e-10)
        e = E + spec.v_minus_min
        if e > 0:
            assert quantizers.rm2_swkb_action(spec, e) == pytest.approx(
                quantizers.swkb_action(spec, e), rel=1e-10)


# -- phases ----------------------------------------------------------------

@pytest.mark.parametrize("n", [0, 1, 4])
def test_ft_phases_harmonic(sho, n):
    E = 2 * n + 1.0
    tp = quantizers.turning_points_potential(sho, E)
    ph = quantizers.ft_phases(sho, E, tp)
    assert ph.phi_left == pytest.approx(PI / 2, abs=1e-12)
    assert ph.phi_right == pytest.approx(PI / 2, abs=1e-12)
    assert ph.maslov == pytest.approx(2.0, abs=1e-12)


def test_ft_phases_vanish_at_high_energy(rm2):
    tp = TurningPair(-50.0, 50.0, "potential")
    mus = [quantizers.ft_phases(rm2, E, tp).maslov for E in (1e2, 1e4, 1e8)]
    assert mus[0] > mus[1] > mus[2] > 0
    assert mus[2] < 1e-3


def test_ft_maslov_below_two_for_rm2(rm2):
    res = quantizers.solve_ft(rm2, 0)
    assert res.phases.maslov < 2.0


def test_ft_phases_zero_energy(rm2):
    with pytest.raises(ZeroEnergy):
        quantizers.ft_phases(rm2, 0.0, TurningPair(-1.0, 1.0, "potential"))


# -- solvers ---------------------------------------------------------------

@pytest.mark.parametrize("method", quantizers.METHODS)
def test_harmonic_exact_for_all_methods(sho, method):
    for n in range(6):
        assert quantizers.solve(sho, n, method).energy == pytest.approx(
            2 * n + 1, rel=1e-10)


def test_rm2_worked_example(rm2):
    exact = 23.0 / 12.0
    wkb = quantizers.solve_wkb(rm2, 0)
    ft = quantizers.solve_ft(rm2, 0)
    closed = 6 - (math.sqrt(6) - 0.5) ** 2 + 1 / 6 - 1 / (math.sqrt(6) - 0.5) ** 2
    assert wkb.energy == pytest.approx(closed, rel=1e-10)
    assert wkb.energy == pytest.approx(2.1030, abs=1e-4)
    assert 100 * (wkb.energy - exact) / exact == pytest.approx(9.7, abs=0.1)
    assert 100 * (ft.energy - exact) / exact == pytest.approx(-3.2, abs=0.1)
    assert ft.energy == pytest.approx(1.855, abs=2e-3)


def test_rm2_swkb_closed_form():
    p = {"A": 6.0, "B": 2.0, "alpha": 1.0}
    spec = catalog.make_spec("rosen_morse_2", p)
    for n in range(4):
        ref = 36 - (6 - n) ** 2 + 4 / 36 - 4 / (6 - n) ** 2
        assert quantizers.solve_swkb(spec, n).energy_minus == pytest.approx(
            ref, rel=1e-10, abs=1e-12)
        assert quantizers.rm2_swkb_energy(6.0, 2.0, 1.0, n) == pytest.approx(
            ref, rel=1e-14, abs=1e-14)


def test_swkb_ground_state_is_zero(default_specs):
    for spec in default_specs.values():
        res = quantizers.solve_swkb(spec, 0)
        assert res.energy_minus == 0.0
        assert res.energy == -spec.v_minus_min


def test_solvers_are_not_seeded_with_the_answer(rm2):
    # a real root search runs; the result is not copied from the spectrum
    spec = catalog.make_spec("morse")
    assert quantizers.solve_wkb(spec, 2).iterations > 0
    assert quantizers.solve_swkb(spec, 2).iterations > 0


def test_result_metadata(rm2):
    res = quantizers.solve_wkb(rm2, 0)
    assert res.method == "wkb" and res.n == 0
    assert res.phases.maslov == 2.0
    assert res.energy_minus == pytest.approx(res.energy + rm2.v_minus_min)
    assert res.turning.left < res.turning.right
    assert res.residual < 1e-9


def test_morse_deep_well_ft_observation():
    # WKB is exact for Morse; FT errors are small and shrink up the spectrum
    spec = catalog.make_spec("morse", {"A": 10.0, "B": 1.0, "alpha": 1.0})
    errs = []
    for n in (0, 5, spec.max_level - 1):
        ex = catalog.exact_energy(spec, n)
        assert quantizers.solve_wkb(spec, n).energy == pytest.approx(ex, rel=1e-10)
        errs.append(abs(quantizers.solve_ft(spec, n).energy - ex) / ex)
    assert errs[0] > errs[1] > errs[2] > 0
    assert errs[2] < 1e-4


@pytest.mark.parametrize("method", quantizers.METHODS)
def test_unbound_level(rm2, method):
    with pytest.raises(Unbound):
        quantizers.solve(rm2, 1, method)
    with pytest.raises(Unbound):
        quantizers.solve(rm2, -1, method)


def test_unknown_method(rm2):
    with pytest.raises(ValueError):
        quantizers.solve(rm2, 0, "bohr")
