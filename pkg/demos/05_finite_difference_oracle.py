"""An independent check: finite differences on the Schrodinger equation.

-psi'' + V psi = E psi on a uniform grid gives a symmetric tridiagonal
matrix.  Its error is O(h^2), so two grids combined as (4 E_fine - E_coarse)/3
cancel the leading term (Richardson extrapolation).
"""

import numpy as np

from shapeinv import catalog, oracle

# Particle in a box [0, pi]: levels n^2.
box = oracle.solve_schrodinger(lambda x: np.zeros_like(x),
                               oracle.GridSpec(0.0, np.pi, 1000), 3, walls=(True, True))
print("box        coarse:", box.levels, "\n           extrapolated:", box.richardson_estimate)

# Second-order convergence on V = x^2.
print("\npoints   E0 - 1")
for points in (250, 500, 1000, 2000):
    e0 = oracle.fd_levels(lambda x: x * x, oracle.GridSpec(-10, 10, points), 1)[0]
    print(f"{points:6d}   {e0 - 1:.3e}")

# Every family: box sized from the decay of the wavefunction into the
# forbidden region; finite domain ends become hard walls.
print("\nfamily                       n   exact          oracle         rel diff")
for fid in catalog.list_families():
    spec = catalog.make_spec(fid)
    k = 3 if spec.max_level is None else min(3, spec.max_level)
    grid = oracle.default_grid(spec, k)
    res = oracle.solve_schrodinger(spec, grid, k)
    for entry, e in zip(catalog.exact_spectrum(spec, k - 1), res.richardson_estimate):
        print(f"{fid:27s} {entry.n:2d}   {entry.e_shifted:12.8f}   {e:12.8f}   "
              f"{abs(e - entry.e_shifted) / entry.e_shifted:.1e}")

# A box that clips the wavefunction is rejected.
try:
    oracle.solve_schrodinger(lambda x: x * x, oracle.GridSpec(-1.5, 1.5, 400), 1)
except oracle.GridTooSmall as exc:
    print("\nGridTooSmall:", exc)
