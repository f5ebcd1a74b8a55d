"""The mutual-information network of an evolving chain.

Pairwise mutual information (in the halved convention used throughout)
turns each snapshot into a weighted graph over the sites.  Its density,
clustering coefficient, and disparity summarize how correlations spread:
density and clustering oscillate with the blinker's collapses and
revivals, while the disparity settles once the network backbone stops
changing.
"""

import numpy as np

from qgol import (
    SpinConfig,
    build_hamiltonian,
    disparity,
    evolve_rk4,
    make_fock_state,
    mutual_information_matrix,
    network_clustering,
    network_density,
)

L = 11
h = build_hamiltonian(L)
initial = make_fock_state(SpinConfig.from_string("00001010000"))

rows = []


def observe(t, state):
    mi = mutual_information_matrix(state)
    rows.append((t, network_density(mi), network_clustering(mi), disparity(mi), mi))


evolve_rk4(h, initial, t_max=30.0, dt=0.01, sample_every=100,
           observer=observe, keep_states=False)

print("   t   density  clustering  disparity")
for t, d, c, y, _ in rows:
    print(f"{t:5.1f}  {d:8.4f}  {c:10.4f}  {y:9.4f}")

# strongest links of the final snapshot
_, _, _, _, mi = rows[-1]
pairs = [(mi[i, j], i + 1, j + 1) for i in range(L) for j in range(i + 1, L)]
pairs.sort(reverse=True)
print("\nstrongest correlations at t=30:")
for w, i, j in pairs[:6]:
    print(f"  sites {i:2d} -- {j:2d}   I = {w:.4f}")
print("\nthe heaviest links stay pinned to the blinker cells and their echo")
print("partners, the backbone the disparity has converged onto.")
