"""
Numerical probe of the boundary maximum principle
=================================================

At a point z0 where |w| attains its maximum on the circle |z| = r, the
logarithmic derivative z0 w'(z0) / w(z0) must be a real number at least
the leading index of w, and Re(z0 w''/w') + 1 must dominate it. The
probe locates the argmax numerically and reports these quantities.
"""

import numpy as np

from diskcheck import PolySeries, jack_probe

w = PolySeries(np.array([0, 1, 0.5], dtype=complex))  # w = z + z^2/2
for r in (0.5, 0.9):
    rep = jack_probe(w, 1, r)
    print(f"w = z + z^2/2, r={r}")
    print("  argmax z0      :", rep.z0)
    print("  z0 w'/w        :", rep.ratio, " (real, >= 1)")
    print("  curvature check:", rep.curvature_check, " (>= ratio)")

# leading index 2: the ratio lower bound moves up with it
w2 = PolySeries(np.array([0, 0, 1, 0, 0.3j], dtype=complex))
rep = jack_probe(w2, 2, 0.9)
print("\nw = z^2 + 0.3i z^4, r=0.9")
print("  ratio:", rep.ratio, " curvature:", rep.curvature_check)

# a monomial is the degenerate case: |w| is constant on the circle and
# the ratio equals the index exactly everywhere
rep = jack_probe(PolySeries(np.array([0, 0, 0, 1], dtype=complex)), 3, 0.7)
print("\nw = z^3, r=0.7: ratio =", rep.ratio)
