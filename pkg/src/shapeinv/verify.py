"""Self-check suite behind ``shapeinv verify``.

Each check returns a :class:`Check`; the CLI prints one line per check and
exits non-zero if any fails.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import catalog, integrals, numerics, oracle, quantizers
from .report import RM2_EXAMPLE


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def levels_to_check(spec, cap=5):
    top = cap if spec.max_level is None else min(cap, spec.max_level - 1)
    return range(top + 1)


def sample_grid(spec, points=500, span=20.0):
    """Interior grid: ``span`` length scales around the minimum, kept
    ``1e-6`` scales away from any finite end."""
    lo, hi = spec.domain
    s = spec.scale
    a = max(spec.x_at_min - span * s, lo + 1e-6 * s)
    b = min(spec.x_at_min + span * s, hi - 1e-6 * s)
    return np.linspace(a, b, points)


def shape_invariance_residual(spec, points=500) -> float:
    """Largest ``|V_+(a0) - V_-(a1) - R(a0)| / max(1, |V_+(a0)|)``."""
    x = sample_grid(spec, points)
    vp = catalog.v_plus(spec, x)
    res = vp - catalog.v_minus(spec, x, k=1) - spec.family.remainder(spec.params)
    return float(np.max(np.abs(res) / np.maximum(1.0, np.abs(vp))))


def wavefunction_points(spec, count=50):
    e0 = catalog.exact_energy(spec, 0)
    e = min(3.0 * e0, 0.5 * (e0 + spec.continuum()))
    tp = quantizers.turning_points_potential(spec, e)
    return np.linspace(tp.left, tp.right, count + 2)[1:-1]


def log_derivative_error(spec, count=50) -> float:
    """Largest relative mismatch between ``-psi0'/psi0`` and ``W``."""
    h = 1e-5 * spec.scale
    psi = lambda x: catalog.ground_state_wavefunction(spec, x)
    worst = 0.0
    for x in wavefunction_points(spec, count):
        lhs = -numerics.derivative(psi, x, h) / psi(x)
        w = float(spec.W(x))
        worst = max(worst, abs(lhs - w) / max(1.0, abs(w)))
    return worst


def check_rm2_example() -> Check:
    spec = catalog.make_spec("rosen_morse_2", RM2_EXAMPLE)
    exact = catalog.exact_energy(spec, 0)
    orc = oracle.solve_schrodinger(spec, oracle.default_grid(spec, 1), 1)
    orc_err = abs(orc.richardson_estimate[0] - 23.0 / 12.0) / (23.0 / 12.0)
    wkb = 100.0 * (quantizers.solve_wkb(spec, 0).energy - exact) / exact
    ft = 100.0 * (quantizers.solve_ft(spec, 0).energy - exact) / exact
    ok = (abs(exact - 23.0 / 12.0) < 1e-12 and orc_err <= 1e-5
          and abs(wkb - 9.7) <= 0.1 and abs(ft + 3.2) <= 0.1)
    return Check("rosen_morse_2 worked example", ok,
                 f"E0={exact:.6f} (oracle rel err {orc_err:.1e}), "
                 f"WKB {wkb:+.2f}%, FT {ft:+.2f}%")


def check_swkb_exact() -> Check:
    worst = 0.0
    for fid in catalog.list_families():
        spec = catalog.make_spec(fid)
        for n in levels_to_check(spec):
            e = quantizers.solve_swkb(spec, n).energy
            ex = catalog.exact_energy(spec, n)
            worst = max(worst, abs(e - ex) / max(ex, 1.0))
    return Check("SWKB exact for every family, n <= 5", worst <= 1e-8,
                 f"max rel err {worst:.1e}")


def _ground_deviation(method, fid):
    spec = catalog.make_spec(fid)
    e = quantizers.solve(spec, 0, method).energy
    ex = catalog.exact_energy(spec, 0)
    return abs(e - ex) / ex


def _exact_levels_error(method, fid):
    spec = catalog.make_spec(fid)
    worst = 0.0
    for n in levels_to_check(spec):
        e = quantizers.solve(spec, n, method).energy
        ex = catalog.exact_energy(spec, n)
        worst = max(worst, abs(e - ex) / max(ex, 1.0))
    return worst


def check_wkb_subset() -> Check:
    exact_ids = ("harmonic_oscillator", "morse")
    err = max(_exact_levels_error("wkb", f) for f in exact_ids)
    others = {f: _ground_deviation("wkb", f) for f in catalog.list_families()
              if f not in exact_ids}
    ok = err <= 1e-8 and min(others.values()) > 0.005
    return Check("WKB exact only for oscillator and Morse", ok,
                 f"exact-family err {err:.1e}, smallest other ground-state "
                 f"deviation {100 * min(others.values()):.2f}%")


def check_ft_subset() -> Check:
    err = _exact_levels_error("ft", "harmonic_oscillator")
    others = {f: _ground_deviation("ft", f) for f in catalog.list_families()
              if f != "harmonic_oscillator"}
    ok = err <= 1e-8 and min(others.values()) > 1e-6
    return Check("FT exact only for the oscillator", ok,
                 f"oscillator err {err:.1e}, smallest other ground-state "
                 f"deviation {100 * min(others.values()):.2f}%")


def random_limits(kind, rng, count=100):
    out = []
    while len(out) < count:
        if kind == 2:
            a, b = np.sort(rng.uniform(1e-3, 20.0, 2))
        elif kind == 4:
            a, b = np.sort(rng.uniform(-0.999, 0.999, 2))
        elif kind == 5:
            a, b = np.sort(rng.uniform(1.001, 20.0, 2))
        else:
            a, b = np.sort(rng.uniform(-20.0, 20.0, 2))
        if b - a > 1e-3:
            out.append((float(a), float(b)))
    return out


def check_integrals(seed=20240601) -> Check:
    rng = np.random.default_rng(seed)
    worst = 0.0
    degenerate_ok = True
    for kind, fn in integrals.CLOSED_FORMS.items():
        for a, b in random_limits(kind, rng):
            ref = integrals.by_quadrature(kind, a, b)
            worst = max(worst, abs(fn(a, b) - ref) / max(1e-12, abs(fn(a, b))))
        c = {2: 3.0, 4: 0.3, 5: 3.0}.get(kind, -1.5)
        degenerate_ok &= fn(c, c) == 0.0
    return Check("closed-form integrals vs quadrature",
                 worst <= 1e-8 and degenerate_ok,
                 f"max rel err {worst:.1e}, degenerate limits "
                 f"{'zero' if degenerate_ok else 'NONZERO'}")


def check_shape_invariance() -> Check:
    worst = max(shape_invariance_residual(catalog.make_spec(f))
                for f in catalog.list_families())
    return Check("shape invariance residual", worst <= 1e-9,
                 f"max scaled residual {worst:.1e}")


def check_wavefunctions() -> Check:
    worst = max(log_derivative_error(catalog.make_spec(f))
                for f in catalog.list_families())
    return Check("-psi0'/psi0 equals W", worst <= 1e-6,
                 f"max rel mismatch {worst:.1e}")


def check_oracle() -> Check:
    worst = 0.0
    for fid in catalog.list_families():
        spec = catalog.make_spec(fid)
        k = len(levels_to_check(spec, cap=3))
        res = oracle.solve_schrodinger(spec, oracle.default_grid(spec, k), k)
        ex = np.array([e.e_shifted for e in catalog.exact_spectrum(spec, k - 1)])
        worst = max(worst, float(np.max(np.abs(res.richardson_estimate - ex) / ex)))
    return Check("finite-difference oracle vs exact levels", worst <= 1e-5,
                 f"max rel err {worst:.1e}")


RM2_ANALYTIC = {"A": 6.0, "B": 2.0, "alpha": 1.0}


def check_rm2_closed_forms() -> Check:
    p = RM2_ANALYTIC
    spec = catalog.make_spec("rosen_morse_2", p)
    worst = 0.0
    for n in range(4):
        e_w = quantizers.solve_wkb(spec, n).energy
        e_s = quantizers.solve_swkb(spec, n).energy_minus
        cw = quantizers.rm2_wkb_energy(p["A"], p["B"], p["alpha"], n)
        cs = quantizers.rm2_swkb_energy(p["A"], p["B"], p["alpha"], n)
        worst = max(worst, abs(e_w - cw) / max(1.0, cw),
                    abs(e_s - cs) / max(1.0, cs))
    return Check("rosen_morse_2 closed forms vs solvers", worst <= 1e-8,
                 f"max rel err {worst:.1e}")


CHECKS = (
    check_rm2_example, check_swkb_exact, check_wkb_subset, check_ft_subset,
    check_integrals, check_shape_invariance, check_wavefunctions,
    check_oracle, check_rm2_closed_forms,
)


def run_all() -> list[Check]:
    out = []
    for fn in CHECKS:
        try:
            out.append(fn())
        except Exception as exc:  # a crash is a failed check, not a traceback
            out.append(Check(fn.__name__, False, f"{type(exc).__name__}: {exc}"))
    return out
