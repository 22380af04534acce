"""WKB, SWKB and Friedrich-Trost levels, compared with exact levels.

    WKB   int sqrt(E - V) dx     = (n + 1/2) pi
    SWKB  int sqrt(E_- - W^2) dx = n pi
    FT    int sqrt(E - V) dx     = (n + mu(E)/4) pi,  mu from W at the turning points
"""

from shapeinv import catalog, quantizers

# The Rosen-Morse II worked example.
rm2 = catalog.make_spec("rosen_morse_2", {"A": 2, "B": 1, "alpha": 1})
exact = catalog.exact_energy(rm2, 0)
print(f"Rosen-Morse II (A=2, B=1, alpha=1), exact E0 = {exact:.6f}")
for method in quantizers.METHODS:
    res = quantizers.solve(rm2, 0, method)
    print(f"  {method:5s} E0 = {res.energy:.6f}  "
          f"({100 * (res.energy - exact) / exact:+.2f}%)  "
          f"root-search iterations: {res.iterations}")
print(f"  closed-form WKB E0 = {quantizers.rm2_wkb_energy(2, 1, 1, 0):.6f}")

# SWKB reproduces the exact spectrum for every family.
print("\nSWKB against exact, first levels of every family:")
for fid in catalog.list_families():
    spec = catalog.make_spec(fid)
    top = 3 if spec.max_level is None else min(3, spec.max_level - 1)
    worst = max(abs(quantizers.solve_swkb(spec, n).energy
                    - catalog.exact_energy(spec, n)) / catalog.exact_energy(spec, n)
                for n in range(top + 1))
    print(f"  {fid:27s} max rel err {worst:.1e}")

# WKB is exact for the oscillator and Morse only; elsewhere the ground state
# misses by several percent.
print("\nGround-state errors, WKB and FT:")
for fid in catalog.list_families():
    spec = catalog.make_spec(fid)
    ex = catalog.exact_energy(spec, 0)
    w = quantizers.solve_wkb(spec, 0).energy
    f = quantizers.solve_ft(spec, 0).energy
    print(f"  {fid:27s} WKB {100 * (w - ex) / ex:+7.3f}%   FT {100 * (f - ex) / ex:+7.3f}%")

# Asking for a level beyond the bound spectrum is an error, not a guess.
try:
    quantizers.solve_wkb(rm2, 1)
except quantizers.Unbound as exc:
    print("\nUnbound:", exc)
