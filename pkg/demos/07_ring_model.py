"""Semiclassical ring model for classically recurrent configurations.

A classical cycle of period n, promoted to a quantum hopping problem over
its n configurations, is a circulant matrix diagonalized by the discrete
Fourier basis: E_m = 2J cos(2 pi m / n).  Exactly periodic quantum motion
would need pairwise commensurate energy gaps; the check below shows that
n = 4 qualifies while n = 5 does not (its gap ratios hit the golden
ratio), so the probability weight never refocuses for n = 5.
"""

import numpy as np

from qgol import commensurability_check, ring_eigensystem, ring_evolution

for n in (2, 3, 4, 5, 6):
    model = ring_eigensystem(n, hopping=1.0)
    report = commensurability_check(n)
    verdict = "commensurate" if report.commensurate else "incommensurate"
    energies = ", ".join(f"{e:+.3f}" for e in model.eigenvalues)
    print(f"n={n}:  E/J = [{energies}]  ->  {verdict}")
    for a in range(len(report.gaps)):
        for b in range(a + 1, len(report.gaps)):
            frac = report.fractions[a * len(report.gaps) + b]
            shown = f"{frac.numerator}/{frac.denominator}" if frac else "irrational"
            print(f"      gap ratio {report.gaps[a]:.4f}/{report.gaps[b]:.4f} = "
                  f"{report.ratios[a, b]:.6f}  ({shown})")

print("\nreturn probability p_k0(t) on the ring, J = 1:")
print("   t    n=4      n=5")
m4, m5 = ring_eigensystem(4), ring_eigensystem(5)
for t in np.arange(0.0, 6.5, 0.5):
    p4 = ring_evolution(m4, 0, t)[0]
    p5 = ring_evolution(m5, 0, t)[0]
    print(f"{t:5.1f}  {p4:.4f}  {p5:.4f}")
print("\nn=4 revives exactly (p=1 recurs); n=5 never quite does.")
