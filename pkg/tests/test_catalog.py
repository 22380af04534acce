import math

import numpy as np
import pytest

from shapeinv import catalog
from shapeinv.catalog import WavefunctionOverflow
from shapeinv.errors import OutOfDomain, ParamViolation


# Closed-form spectra on the V_- scale, written out independently of the
# remainder functions in the catalogue.
def _closed_spectrum(fid, p, n):
    if fid == "harmonic_oscillator":
        return n * p["omega"]
    if fid == "radial_oscillator":
        return 2 * n * p["omega"]
    if fid == "coulomb":
        l = p["l"]
        return p["e2"] ** 2 / 4 * (1 / (l + 1) ** 2 - 1 / (n + l + 1) ** 2)
    A, B, al = p.get("A"), p.get("B"), p.get("alpha")
    if fid in ("morse", "scarf_2", "generalized_poschl_teller"):
        return A**2 - (A - n * al) ** 2
    if fid == "rosen_morse_2":
        return A**2 - (A - n * al) ** 2 + B**2 / A**2 - B**2 / (A - n * al) ** 2
    if fid == "eckart":
        return A**2 - (A + n * al) ** 2 + B**2 / A**2 - B**2 / (A + n * al) ** 2
    if fid == "scarf_1":
        return (A + n * al) ** 2 - A**2
    if fid == "rosen_morse_1":
        return (A + n * al) ** 2 - A**2 + B**2 / A**2 - B**2 / (A + n * al) ** 2
    raise KeyError(fid)


FAMILIES = catalog.list_families()


def test_list_families():
    fams = catalog.list_families()
    assert len(fams) == 10
    assert "rosen_morse_2" in fams
    assert {"harmonic_oscillator", "morse"} <= set(fams)
    assert fams == catalog.list_families()  # stable order


def test_config_and_registry_agree():
    assert list(catalog.FAMILY_INFO) == list(catalog.FAMILIES)
    for fid, info in catalog.FAMILY_INFO.items():
        spec = catalog.make_spec(fid)
        assert set(info.defaults) == set(spec.params.values)


def test_harmonic_values(sho):
    assert catalog.v_minus(sho, 0.0) == -1.0
    assert catalog.v_plus(sho, 0.0) == 1.0
    x = np.linspace(-3, 3, 13)
    np.testing.assert_allclose(catalog.potential(sho, x), x * x, atol=1e-14)
    assert catalog.remainder(sho, 0) == 2.0
    assert catalog.remainder(sho, 7) == 2.0
    assert sho.max_level is None


def test_rosen_morse_2_values(rm2):
    assert rm2.v_minus_min == pytest.approx(-23.0 / 12.0, rel=1e-14)
    assert math.tanh(rm2.x_at_min) == pytest.approx(-1.0 / 6.0, abs=1e-10)
    assert catalog.potential(rm2, 0.0) == pytest.approx(1.0 / 6.0, rel=1e-13)
    assert catalog.v_minus(rm2, 40.0) == pytest.approx(6.25, rel=1e-12)
    assert catalog.exact_energy(rm2, 0) == pytest.approx(23.0 / 12.0, rel=1e-14)
    assert rm2.max_level == 1


def test_potential_minimum_is_zero(default_specs):
    for spec in default_specs.values():
        assert catalog.potential(spec, spec.x_at_min) == pytest.approx(0.0, abs=1e-12)
        x = spec.x_at_min + spec.scale * np.array([-1e-3, 1e-3])
        lo, hi = spec.domain
        x = x[(x > lo) & (x < hi)]
        assert np.all(catalog.potential(spec, x) >= 0.0)


@pytest.mark.parametrize("fid", FAMILIES)
def test_partner_difference_is_twice_dw(fid):
    spec = catalog.make_spec(fid)
    lo, hi = spec.domain
    x = np.linspace(max(lo, spec.x_at_min - 5 * spec.scale) + 1e-3 * spec.scale,
                    min(hi, spec.x_at_min + 5 * spec.scale) - 1e-3 * spec.scale, 101)
    diff = catalog.v_plus(spec, x) - catalog.v_minus(spec, x)
    np.testing.assert_allclose(diff, 2.0 * spec.dW(x), rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("fid", FAMILIES)
def test_shape_invariance_constant(fid):
    spec = catalog.make_spec(fid)
    lo, hi = spec.domain
    x = np.linspace(max(lo, spec.x_at_min - 10 * spec.scale) + 1e-4 * spec.scale,
                    min(hi, spec.x_at_min + 10 * spec.scale) - 1e-4 * spec.scale, 500)
    vp = catalog.v_plus(spec, x)
    res = vp - catalog.v_minus(spec, x, k=1) - catalog.remainder(spec, 0)
    assert np.max(np.abs(res) / np.maximum(1.0, np.abs(vp))) <= 1e-9


@pytest.mark.parametrize("fid", FAMILIES)
def test_telescoping_matches_closed_spectrum(fid):
    spec = catalog.make_spec(fid)
    top = 5 if spec.max_level is None else min(5, spec.max_level - 1)
    p = spec.params.as_dict()
    for entry in catalog.exact_spectrum(spec, top):
        ref = _closed_spectrum(fid, p, entry.n)
        assert entry.e_minus == pytest.approx(ref, rel=1e-12, abs=1e-12)
        assert entry.e_shifted == pytest.approx(ref - spec.v_minus_min, rel=1e-12)


@pytest.mark.parametrize("fid", FAMILIES)
def test_defaults_hold_three_levels(fid):
    spec = catalog.make_spec(fid)
    assert spec.max_level is None or spec.max_level >= 3
    assert catalog.exact_spectrum(spec, 0)[0].e_minus == 0.0


def test_level_count_morse():
    spec = catalog.make_spec("morse", {"A": 10.0})
    # A - n alpha must stay positive
    assert spec.max_level == 10


def test_exact_spectrum_rejects_missing_level(rm2):
    with pytest.raises(ParamViolation):
        catalog.exact_spectrum(rm2, 1)
    with pytest.raises(ParamViolation):
        catalog.remainder(rm2, 3)


def test_param_errors():
    with pytest.raises(KeyError, match="valid"):
        catalog.make_spec("morse", {"Q": 1.0})
    with pytest.raises(KeyError):
        catalog.make_spec("no_such_family")
    with pytest.raises(ParamViolation):
        catalog.make_spec("morse", {"A": -1.0})
    with pytest.raises(ParamViolation):
        catalog.make_spec("eckart", {"B": 1.0})


def test_out_of_domain():
    spec = catalog.make_spec("coulomb")
    with pytest.raises(OutOfDomain):
        catalog.v_minus(spec, -1.0)
    with pytest.raises(OutOfDomain):
        catalog.ground_state_wavefunction(spec, 0.0)


def test_ground_state_wavefunction(sho):
    assert catalog.ground_state_wavefunction(sho, sho.x_at_min) == 1.0
    for x in (-2.0, -0.5, 1.0, 3.0):
        assert catalog.ground_state_wavefunction(sho, x) == pytest.approx(
            math.exp(-x * x / 2), rel=1e-12)


@pytest.mark.parametrize("fid", FAMILIES)
def test_ground_state_positive(fid):
    spec = catalog.make_spec(fid)
    lo, hi = spec.domain
    for d in (-2.0, -0.5, 0.5, 2.0):
        x = spec.x_at_min + d * spec.scale
        if lo < x < hi:
            assert 0.0 < catalog.ground_state_wavefunction(spec, x)


def test_wavefunction_overflow(sho):
    with pytest.raises(WavefunctionOverflow):
        catalog.ground_state_wavefunction(sho, 60.0)
