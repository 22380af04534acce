"""The five closed-form turning-point integrals.

Every action integral in this package has the shape
    int_a^b w(y) sqrt((y - a)(b - y)) dy
for one of five weights w.  This script evaluates the closed forms, checks
them against QUADPACK's algebraic-weight rule, and shows why the package
uses rearranged (cancellation-free) forms instead of the printed ones.
"""

import math

import numpy as np

from shapeinv import integrals

# Closed form against the quadrature reference, one interval per weight.
cases = {1: (-3.0, 1.0), 2: (0.5, 7.3), 3: (-5.0, 5.0), 4: (-0.9, 0.3), 5: (1.1, 9.0)}
print("integral  (a, b)         closed form          quadrature           rel diff")
for kind, (a, b) in cases.items():
    closed = integrals.CLOSED_FORMS[kind](a, b)
    quad = integrals.by_quadrature(kind, a, b)
    print(f"I{kind}        {str((a, b)):13s}  {closed:.15f}  {quad:.15f}  "
          f"{abs(closed - quad) / closed:.1e}")

# Coinciding limits give exactly zero: this is the n = 0 SWKB action.
print("\nI_k(c, c):", [integrals.CLOSED_FORMS[k](c, c)
                       for k, c in ((1, 2.0), (2, 3.0), (3, -1.0), (4, 0.4), (5, 2.0))])

# Near-coincident limits.  The printed form of I2 subtracts two nearly equal
# numbers and loses every digit; the rearranged form keeps them.  The
# leading behaviour is pi (b - a)^2 / 8 * w(a).
a = 5.0
print("\nb - a      printed I2            stable I2             leading term")
for d in 10.0 ** -np.arange(2, 10, 2):
    lead = math.pi * d * d / 8 / a
    print(f"{d:.0e}    {integrals.textbook(2, a, a + d):+.6e}    "
          f"{integrals.i2(a, a + d):+.6e}    {lead:+.6e}")

# Limits outside a weight's domain are rejected.
try:
    integrals.i4(-0.5, 1.2)
except integrals.DomainViolation as exc:
    print("\nDomainViolation:", exc)
