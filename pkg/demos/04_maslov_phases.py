"""Energy-dependent reflection phases in the Friedrich-Trost rule.

The FT rule replaces the constant WKB phase pi/2 at each turning point by
    phi_L = 2 atan(-W(x_L)/k),  phi_R = 2 atan(W(x_R)/k),  k = sqrt(E).
Their sum in units of pi/2 is the Maslov index mu; standard WKB has mu = 2.
"""

import numpy as np

from shapeinv import catalog, quantizers

# Oscillator: W(+-x_t) = +-sqrt(E), so both phases are pi/2 at every energy.
sho = catalog.make_spec("harmonic_oscillator")
for E in (1.0, 3.0, 25.0):
    tp = quantizers.turning_points_potential(sho, E)
    print(f"oscillator E={E:5.1f}: mu = {quantizers.ft_phases(sho, E, tp).maslov:.12f}")

# Rosen-Morse II: at its bound levels mu sits a little below 2, which is
# why the FT levels come out below the WKB ones.
spec = catalog.make_spec("rosen_morse_2", {"A": 6, "B": 2, "alpha": 1})
print("\nRosen-Morse II (A=6, B=2, alpha=1)")
print("   E        phi_L     phi_R     mu")
for E in np.linspace(0.5, 0.98 * spec.continuum(), 6):
    tp = quantizers.turning_points_potential(spec, E)
    ph = quantizers.ft_phases(spec, E, tp)
    print(f"  {E:7.3f}  {ph.phi_left:8.5f}  {ph.phi_right:8.5f}  {ph.maslov:8.5f}")

# The FT level solves action(E) = (n + mu(E)/4) pi with mu taken at E itself.
print("\nlevel   exact      WKB        FT         mu at FT level")
for n in range(spec.max_level):
    ex = catalog.exact_energy(spec, n)
    w = quantizers.solve_wkb(spec, n).energy
    ft = quantizers.solve_ft(spec, n)
    print(f"  {n}   {ex:9.5f}  {w:9.5f}  {ft.energy:9.5f}  {ft.phases.maslov:.5f}")

# W is bounded for Rosen-Morse II, so at energies far above the well both
# arctangent arguments W/k shrink and mu goes to 0.
tp = quantizers.TurningPair(-40.0, 40.0, "potential")
print("\nfixed far-out points x = +-40:")
for E in (1e2, 1e4, 1e6):
    print(f"  E={E:.0e}: mu = {quantizers.ft_phases(spec, E, tp).maslov:.6f}")
