"""The classical F12 automaton: light cones, frozen boundaries, cycles.

A bulk cell swaps its state whenever exactly two or three of its four
nearest and next-nearest neighbours are alive.  Started from a single
101 seed, the alive region spreads at about half a cell per step; the
outermost two sites on each side never change.
"""

from qgol import SpinConfig, classical_trajectory, find_classical_cycle

seed = SpinConfig.from_string("00001010000")
print("step     t  configuration")
traj = classical_trajectory(seed, 12)
for k, (t, cfg) in enumerate(zip(traj.times, traj.steps)):
    print(f"{k:4d}  {t:4.1f}  {cfg}")

print()
print("Orbit structure (offset = steps before the cycle is entered):")
for bits in ("00001010000", "01010000000", "00000000000", "01110000000"):
    cfg = SpinConfig.from_string(bits)
    offset, period = find_classical_cycle(cfg, max_steps=4096)
    print(f"  {bits}: enters a period-{period} cycle after {offset} step(s)")

# Any configuration with two or three alive neighbours around site 3 of a
# five-site chain flips back and forth forever: flipping a site never
# changes that site's own neighbourhood.
pair = SpinConfig.from_string("01010")
print()
print(f"period-2 pair: {pair} <-> {classical_trajectory(pair, 1).steps[1]}")
