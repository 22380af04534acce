"""The ten shape-invariant families.

Each family is a superpotential W(x; a).  The partner potentials are
V_- = W^2 - W' and V_+ = W^2 + W'.  Shape invariance means that V_+(a0) equals
V_-(a1) plus a constant R(a0).  The exact spectrum of V_- is then a sum of
these constants.  Reports use V = V_- - min V_-, so that min V = 0.
"""

import numpy as np

from shapeinv import catalog

# Roster with default parameters and the number of bound states.
for fid in catalog.list_families():
    spec = catalog.make_spec(fid)
    info = catalog.FAMILY_INFO[fid]
    count = "inf" if spec.max_level is None else spec.max_level
    print(f"{fid:27s} W = {info.superpotential:38s} levels: {count}")

# Rosen-Morse II at A=2, B=1, alpha=1: V_- has its minimum where
# tanh x = -1/6, with value -23/12, so the ground state sits at E = 23/12.
rm2 = catalog.make_spec("rosen_morse_2", {"A": 2, "B": 1, "alpha": 1})
print(f"\nRosen-Morse II: tanh(x_min) = {np.tanh(rm2.x_at_min):.12f}, "
      f"V_-min = {rm2.v_minus_min:.12f} (-23/12 = {-23 / 12:.12f})")
print(f"V(0) = {catalog.potential(rm2, 0.0):.12f}  (1/6)")
print(f"bound states: {rm2.max_level}")

# Shape invariance on a grid: V_+(x, a0) - V_-(x, a1) is flat.
spec = catalog.make_spec("scarf_1")
x = np.linspace(-1.4, 1.4, 9)
diff = catalog.v_plus(spec, x) - catalog.v_minus(spec, x, k=1)
print(f"\nScarf I: V_+(a0) - V_-(a1) on a grid = {np.round(diff, 12)}")
print(f"         R(a0) = {catalog.remainder(spec, 0)}")

# The exact spectrum from the telescoping sum.
morse = catalog.make_spec("morse")
print("\nMorse levels (n, E_-, E):")
for entry in catalog.exact_spectrum(morse, morse.max_level - 1):
    print(f"  {entry.n}  {entry.e_minus:8.4f}  {entry.e_shifted:8.4f}")

# Ground state psi0 = exp(-int W); its log-derivative is -W.
x0 = morse.x_at_min + 0.3
psi = lambda x: catalog.ground_state_wavefunction(morse, x)
h = 1e-5
print(f"\n-psi0'/psi0 at x={x0:.3f}: "
      f"{-(psi(x0 + h) - psi(x0 - h)) / (2 * h) / psi(x0):.9f}, "
      f"W = {float(morse.W(x0)):.9f}")
