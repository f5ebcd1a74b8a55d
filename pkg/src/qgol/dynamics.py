"""Time evolution: Schrodinger integration, the classical automaton, and
the stroboscopic-projective construction that connects them.

The quantum engine is classic fixed-step RK4 on d/dt psi = -i H psi with
the paper-scale default step 0.01.  Norm drift is a measured error signal:
nothing is renormalized, and drift beyond `NORM_ABORT` aborts the run.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import pi

import numpy as np

from .hamiltonian import SparseHamiltonian, alive_neighbors, frozen_sector
from .lattice import SpinConfig, StateVector, config_from_index, fock_index

#: Integration aborts when a sampled state drifts this far from unit norm.
NORM_ABORT = 1e-4

#: Discrete step duration used when classical steps share a time axis with
#: the continuous evolution (the swap time of a single spin).
CLASSICAL_STEP = pi / 2


class IntegrationError(RuntimeError):
    """Raised when the fixed-step integrator leaves its validity regime."""


@dataclass
class Trajectory:
    """Sampled quantum evolution: times, optional states, observer records."""

    times: np.ndarray
    dt: float
    states: list[StateVector] | None
    records: list | None
    norm_drift: float


@dataclass
class ClassicalTrajectory:
    """Sequence of configurations under the discrete rule, initial one included."""

    steps: list[SpinConfig]

    @property
    def times(self) -> np.ndarray:
        return CLASSICAL_STEP * np.arange(len(self.steps))

    def __len__(self) -> int:
        return len(self.steps)


def classical_f12_step(config: SpinConfig) -> SpinConfig:
    """One synchronous update: bulk site i swaps iff its neighbourhood holds
    2 or 3 alive cells, all flips computed from the pre-step configuration."""
    bits = config.bits
    L = config.L
    new = list(bits)
    for i in range(3, L - 1):  # sites 3 .. L-2
        count = bits[i - 3] + bits[i - 2] + bits[i] + bits[i + 1]
        if count == 2 or count == 3:
            new[i - 1] ^= 1
    return SpinConfig(tuple(new))


def classical_trajectory(config: SpinConfig, n_steps: int) -> ClassicalTrajectory:
    """Iterate the rule ``n_steps`` times, recording every configuration."""
    if n_steps < 0:
        raise ValueError("n_steps must be nonnegative")
    steps = [config]
    for _ in range(n_steps):
        steps.append(classical_f12_step(steps[-1]))
    return ClassicalTrajectory(steps=steps)


def _single_sector(amps: np.ndarray, L: int):
    """Boundary occupations if the state lives in one frozen sector, else None."""
    nz = np.flatnonzero(amps)
    if nz.size == 0:
        return None
    low = nz & 3
    high = nz >> (L - 2)
    if np.all(low == low[0]) and np.all(high == high[0]):
        return int(low[0]), int(high[0])
    return None


def evolve_rk4(
    h: SparseHamiltonian,
    initial: StateVector,
    t_max: float,
    dt: float = 0.01,
    sample_every: int = 1,
    observer=None,
    keep_states: bool = True,
    use_frozen_sector: bool = True,
) -> Trajectory:
    """Fixed-step fourth-order integration of i d/dt psi = H psi.

    Snapshots are taken at t = 0, every ``sample_every`` steps, and at the
    final step.  For each snapshot the full state is reconstructed and
    passed to ``observer(t, state)`` when given; observer returns are
    collected in ``Trajectory.records``.  With ``keep_states=False`` the
    snapshots themselves are discarded (memory bound: one 2**L vector).

    When the initial state is confined to a single frozen-boundary sector
    (every Fock state is), the integration runs on the 2**(L-4) dimensional
    block of H, which is exact: the remaining amplitudes are zero and stay
    zero under the block-diagonal H.  ``use_frozen_sector=False`` forces
    the full-space path.

    Raises
    ------
    IntegrationError
        If a sampled norm drifts more than `NORM_ABORT` from 1 (the step is
        too large for the spectral radius of H).
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_max < 0:
        raise ValueError("t_max must be nonnegative")
    if sample_every < 1:
        raise ValueError("sample_every must be >= 1")
    if initial.dim != h.dim:
        raise ValueError(f"dimension mismatch: state {initial.dim}, H {h.dim}")
    # RK4 is stable for |E| dt < 2*sqrt(2) and max|E| <= max row degree <= L-4
    if dt * h.L > 0.5:
        warnings.warn(
            f"dt*L = {dt * h.L:.3g} > 0.5: RK4 may be inaccurate or unstable",
            stacklevel=2,
        )

    # whole steps of size dt plus one shortened step landing exactly on t_max
    n_full = int(np.floor(t_max / dt + 1e-12))
    remainder = t_max - n_full * dt
    if remainder < 1e-12 * max(1.0, t_max):
        remainder = 0.0
    n_steps = n_full + (1 if remainder else 0)
    sector = _single_sector(initial.amplitudes, h.L) if use_frozen_sector else None
    if sector is not None:
        indices, matrix = frozen_sector(h, *sector)
        psi = initial.amplitudes[indices].copy()
    else:
        indices, matrix = None, h.matrix
        psi = initial.amplitudes.copy()

    def rhs(v):
        # -i H v via two real products (matrix data is real)
        return (matrix @ v.imag) - 1j * (matrix @ v.real)

    times = []
    states = [] if keep_states else None
    records = [] if observer is not None else None
    drift = 0.0

    def take_snapshot(step: int, vec: np.ndarray):
        nonlocal drift
        t = t_max if (remainder and step == n_steps) else step * dt
        nrm = float(np.linalg.norm(vec))
        drift = max(drift, abs(nrm - 1.0))
        if abs(nrm - 1.0) > NORM_ABORT:
            raise IntegrationError(
                f"norm drift {abs(nrm - 1.0):.3e} at t = {t:.4g} exceeds "
                f"{NORM_ABORT:.0e}; reduce dt (currently {dt})"
            )
        times.append(t)
        if keep_states or observer is not None:
            if indices is not None:
                full = np.zeros(h.dim, dtype=complex)
                full[indices] = vec
            else:
                full = vec.copy()
            snapshot = StateVector(full, norm_tol=2 * NORM_ABORT)
            if keep_states:
                states.append(snapshot)
            if observer is not None:
                records.append(observer(t, snapshot))

    take_snapshot(0, psi)
    for step in range(1, n_steps + 1):
        step_dt = remainder if (remainder and step == n_steps) else dt
        k1 = rhs(psi)
        k2 = rhs(psi + (0.5 * step_dt) * k1)
        k3 = rhs(psi + (0.5 * step_dt) * k2)
        k4 = rhs(psi + step_dt * k3)
        psi = psi + (step_dt / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
        if step % sample_every == 0 or step == n_steps:
            take_snapshot(step, psi)

    return Trajectory(
        times=np.asarray(times),
        dt=dt,
        states=states,
        records=records,
        norm_drift=drift,
    )


def evolve_exact(h: SparseHamiltonian, initial: StateVector, t: float) -> StateVector:
    """exp(-i H t) |psi> by dense diagonalization; the integrator oracle.

    Limited to L <= 10 where the 2**L x 2**L eigenproblem is cheap.
    """
    if h.L > 10:
        raise ValueError("dense propagation limited to L <= 10")
    if initial.dim != h.dim:
        raise ValueError(f"dimension mismatch: state {initial.dim}, H {h.dim}")
    w, basis = np.linalg.eigh(h.matrix.toarray())
    amps = basis @ (np.exp(-1j * w * t) * (basis.T @ initial.amplitudes))
    return StateVector(amps, norm_tol=1e-8)


def _rotate_site(amps: np.ndarray, site: int, theta: float) -> np.ndarray:
    """exp(-i theta X_site) applied to a full state vector."""
    flipped = amps[np.arange(amps.size) ^ (1 << (site - 1))]
    return np.cos(theta) * amps - 1j * np.sin(theta) * flipped


def stroboscopic_quantum(
    h: SparseHamiltonian, config: SpinConfig, n_steps: int
) -> ClassicalTrajectory:
    """Projective stroboscopic dynamics measured every pi/2.

    Each step evaluates the neighbour-count projectors on the current Fock
    configuration (a deterministic measurement, since Fock states are
    projector eigenstates), freezes the resulting flip set, rotates every
    flagged site for time pi/2 on the actual state vector, and collapses
    onto the resulting Fock state.  On Fock inputs the sequence coincides
    with the classical rule.
    """
    if n_steps < 0:
        raise ValueError("n_steps must be nonnegative")
    if config.L != h.L:
        raise ValueError(f"configuration L = {config.L} does not match H (L = {h.L})")
    steps = [config]
    current = config
    for _ in range(n_steps):
        flips = [
            i
            for i in range(3, h.L - 1)
            if alive_neighbors(current, i) in (2, 3)
        ]
        amps = np.zeros(h.dim, dtype=complex)
        amps[fock_index(current)] = 1.0
        for site in flips:
            amps = _rotate_site(amps, site, pi / 2)
        winner = int(np.argmax(np.abs(amps)))
        if abs(abs(amps[winner]) - 1.0) > 1e-9:
            raise RuntimeError("stroboscopic step did not land on a Fock state")
        current = config_from_index(winner, h.L)
        steps.append(current)
    return ClassicalTrajectory(steps=steps)
