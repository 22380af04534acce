import numpy as np
import pytest

from shapeinv import catalog, oracle
from shapeinv.errors import GridTooSmall
from shapeinv.oracle import GridSpec


def test_harmonic_box():
    res = oracle.solve_schrodinger(lambda x: x * x, GridSpec(-12.0, 12.0, 4000), 3)
    np.testing.assert_allclose(res.richardson_estimate, [1.0, 3.0, 5.0], atol=1e-5)


def test_particle_in_a_box():
    res = oracle.solve_schrodinger(lambda x: np.zeros_like(x),
                                   GridSpec(0.0, np.pi, 2000), 3, walls=(True, True))
    np.testing.assert_allclose(res.richardson_estimate, [1.0, 4.0, 9.0], atol=1e-4)


def test_rm2_ground_state(rm2):
    res = oracle.solve_schrodinger(rm2, oracle.default_grid(rm2, 1), 1)
    assert res.richardson_estimate[0] == pytest.approx(23.0 / 12.0, abs=1e-5)


def test_second_order_convergence():
    v = lambda x: x * x
    exact = np.array([1.0, 3.0, 5.0])
    err_coarse = np.abs(oracle.fd_levels(v, GridSpec(-10, 10, 500), 3) - exact)
    err_fine = np.abs(oracle.fd_levels(v, GridSpec(-10, 10, 1001), 3) - exact)
    ratio = err_coarse / err_fine
    assert np.all((ratio > 3.5) & (ratio < 4.5))


def test_richardson_beats_both_grids():
    res = oracle.solve_schrodinger(lambda x: x * x, GridSpec(-10, 10, 500), 2)
    exact = np.array([1.0, 3.0])
    assert np.all(np.abs(res.richardson_estimate - exact)
                  < np.abs(res.fine_levels - exact))
    assert np.all(res.richardson_gap > 0)


def test_box_too_small_is_detected():
    with pytest.raises(GridTooSmall):
        oracle.solve_schrodinger(lambda x: x * x, GridSpec(-1.5, 1.5, 400), 1)


@pytest.mark.parametrize("fid", catalog.list_families())
def test_oracle_matches_exact_levels(fid):
    spec = catalog.make_spec(fid)
    k = 4 if spec.max_level is None else min(4, spec.max_level)
    res = oracle.solve_schrodinger(spec, oracle.default_grid(spec, k), k)
    exact = np.array([e.e_shifted for e in catalog.exact_spectrum(spec, k - 1)])
    np.testing.assert_allclose(res.richardson_estimate, exact, rtol=1e-5)


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(1.0, 0.0)
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, points=10)
    g = GridSpec(0.0, 1.0, 100)
    assert g.refined().h == pytest.approx(g.h / 2)
    assert g.nodes()[0] == pytest.approx(g.h)
