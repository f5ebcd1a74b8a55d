"""The quantum blinker: collapses and revivals with no classical analog.

The same 101 seed that spreads ballistically under the classical rule
stays dynamically localized under the Schrodinger evolution.  The
discretized population collapses and revives; the central-site
entanglement entropy is minimal exactly when the pattern revives, and the
nearest-neighbour concurrence oscillates along with it.
"""

import numpy as np

from qgol import (
    SpinConfig,
    alive_cluster_function,
    average_concurrence,
    build_hamiltonian,
    discretize,
    evolve_rk4,
    local_population,
    make_fock_state,
    single_site_entropies,
)

L = 11
initial = SpinConfig.from_string("00001010000")
h = build_hamiltonian(L)

records = []


def observe(t, state):
    n = local_population(state)
    d = discretize(n)
    records.append(
        {
            "t": t,
            "profile": d,
            "n_center": n[L // 2],
            "S_center": single_site_entropies(state)[L // 2],
            "C1": average_concurrence(state, 1),
            "unit_pairs": alive_cluster_function(d, 1),
        }
    )


print(f"evolving the blinker on L={L} up to t=40 (dt=0.01) ...")
trajectory = evolve_rk4(
    h, make_fock_state(initial), t_max=40.0, dt=0.01, sample_every=50,
    observer=observe, keep_states=False,
)
print(f"norm drift over the whole run: {trajectory.norm_drift:.2e}\n")

print("   t   discretized    n_6   S_6   C(d=1)")
for r in records[::2]:
    pattern = "".join(map(str, r["profile"]))
    print(
        f"{r['t']:5.1f}  {pattern}  {r['n_center']:.3f}  {r['S_center']:.3f}  {r['C1']:.3f}"
    )

revived = [r["t"] for r in records if tuple(r["profile"]) == initial.bits and r["t"] > 0]
print(f"\nsnapshots showing the revived initial pattern: t = {np.round(revived, 1)}")
print("note how S_6 dips at those times while C(1) swings with the pattern.")
