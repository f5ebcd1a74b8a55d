"""Bond entropy of a single blinker: linear growth, oscillations, volume law.

Bipartition the chain at every bond and follow the Schmidt entropy.  The
central bond entropy first grows linearly, then oscillates about a slowly
increasing mean, out of phase with the density pattern.  The late-time
spatial profile peaks at the chain center and falls off toward the open
(frozen) edges.
"""

import numpy as np

from qgol import (
    SpinConfig,
    bond_entropy,
    bond_entropy_profile,
    build_hamiltonian,
    evolve_rk4,
    make_fock_state,
)

L = 14
center = L // 2
h = build_hamiltonian(L)
initial = make_fock_state(SpinConfig.from_string("00000101000000"))

series = []
trajectory = evolve_rk4(
    h, initial, t_max=60.0, dt=0.01, sample_every=100,
    observer=lambda t, s: series.append((t, bond_entropy(s, center))),
    keep_states=True,
)

print(f"central bond entropy, L={L}, bond {center}:")
for t, s in series[::5]:
    bar = "#" * int(round(s * 20))
    print(f"  t={t:5.1f}  S={s:6.3f}  {bar}")

profile = bond_entropy_profile(trajectory.states[-1])
print(f"\nspatial profile at t=60 (bond j splits sites 1..j | j+1..{L}):")
for j, s in enumerate(profile, start=1):
    print(f"  bond {j:2d}  S={s:6.3f}  " + "#" * int(round(s * 20)))
print(f"\npeak at bond {int(np.argmax(profile)) + 1}; the outermost bonds stay exactly")
print("disentangled because the two sites next to each edge never evolve.")
