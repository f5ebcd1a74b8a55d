import numpy as np
import pytest

from qgol import (
    CLASSICAL_STEP,
    IntegrationError,
    SpinConfig,
    StateVector,
    classical_f12_step,
    classical_trajectory,
    config_from_index,
    energy_expectation,
    evolve_exact,
    evolve_rk4,
    fock_index,
    make_fock_state,
    overlap,
    stroboscopic_quantum,
)

BLINKER_11 = "00001010000"

# hand-applied rule, half-cell-per-step light cone
BLINKER_TABLE = [
    "00001010000",
    "00001110000",
    "00010001000",
    "00010101000",
    "00011011000",
    "00110001100",
]


def test_all_dead_fixed_point():
    cfg = SpinConfig((0,) * 9)
    assert classical_f12_step(cfg) == cfg


def test_blinker_steps():
    cfg = SpinConfig.from_string(BLINKER_11)
    assert classical_f12_step(cfg).to_string() == "00001110000"
    assert classical_f12_step(classical_f12_step(cfg)).to_string() == "00010001000"


def test_classical_trajectory_examples():
    traj = classical_trajectory(SpinConfig((0,) * 9), 10)
    assert len(traj) == 11
    assert all(c == traj.steps[0] for c in traj.steps)

    traj = classical_trajectory(SpinConfig.from_string(BLINKER_11), 5)
    assert [c.to_string() for c in traj.steps] == BLINKER_TABLE


def test_classical_boundaries_frozen(rng):
    cfg = config_from_index(int(rng.integers(0, 1 << 10)), 10)
    traj = classical_trajectory(cfg, 30)
    for c in traj.steps:
        for site in (1, 2, 9, 10):
            assert c.bit(site) == cfg.bit(site)


def test_classical_times_grid():
    traj = classical_trajectory(SpinConfig((0,) * 9), 3)
    assert np.allclose(traj.times, CLASSICAL_STEP * np.arange(4))


def test_rk4_dead_state_constant(h5):
    tr = evolve_rk4(h5, make_fock_state(SpinConfig((0,) * 5)), 2.0, sample_every=50)
    for state in tr.states:
        assert state.amplitudes[0] == pytest.approx(1.0, abs=1e-12)


def test_rk4_two_level_blinker(h5):
    # span{01010, 01110} is an invariant two-level system: population of
    # site 3 follows sin^2(t), with a full swap at t = pi/2
    psi0 = make_fock_state(SpinConfig.from_string("01010"))
    tr = evolve_rk4(h5, psi0, np.pi / 2, dt=0.01, sample_every=1 << 30)
    final = tr.states[-1]
    target = make_fock_state(SpinConfig.from_string("01110"))
    assert abs(overlap(target, final)) == pytest.approx(1.0, abs=1e-8)

    tr = evolve_rk4(h5, psi0, np.pi / 4, dt=0.01, sample_every=1 << 30)
    p = np.abs(tr.states[-1].amplitudes) ** 2
    assert p[fock_index(SpinConfig.from_string("01110"))] == pytest.approx(0.5, abs=1e-8)


def test_rk4_first_order_amplitude(h11):
    # leading order: amplitude -i*t appears on the singly-coupled config
    t = 1e-3
    tr = evolve_rk4(h11, make_fock_state(SpinConfig.from_string(BLINKER_11)), t, dt=1e-4, sample_every=1 << 30)
    amp = tr.states[-1].amplitudes[fock_index(SpinConfig.from_string("00001110000"))]
    assert amp == pytest.approx(-1j * t, rel=1e-5)


def test_rk4_matches_exact_oracle(h8, rng):
    for _ in range(3):
        psi = make_fock_state(config_from_index(int(rng.integers(0, 1 << 8)), 8))
        approx = evolve_rk4(h8, psi, 5.0, dt=0.01, sample_every=1 << 30).states[-1]
        exact = evolve_exact(h8, psi, 5.0)
        assert np.linalg.norm(approx.amplitudes - exact.amplitudes) < 1e-6


def test_rk4_sector_and_full_paths_agree(h8):
    psi = make_fock_state(SpinConfig.from_string("01011010"))
    a = evolve_rk4(h8, psi, 3.0, sample_every=1 << 30, use_frozen_sector=True)
    b = evolve_rk4(h8, psi, 3.0, sample_every=1 << 30, use_frozen_sector=False)
    assert np.array_equal(a.states[-1].amplitudes, b.states[-1].amplitudes)


def test_rk4_norm_and_energy_conservation(h8):
    c1 = SpinConfig.from_string("01011010")
    c2 = c1.flip(4)
    amps = np.zeros(1 << 8, dtype=complex)
    amps[fock_index(c1)] = amps[fock_index(c2)] = 1 / np.sqrt(2)
    psi = StateVector(amps)
    energies = []
    tr = evolve_rk4(
        h8, psi, 20.0, sample_every=100,
        observer=lambda t, s: energies.append(energy_expectation(h8, s)),
        keep_states=False,
    )
    assert tr.norm_drift < 1e-6
    energies = np.array(energies)
    assert energies[0] != 0.0
    assert np.abs(energies - energies[0]).max() / abs(energies[0]) < 1e-6


def test_rk4_time_reversal(h8):
    # H is real symmetric, so conjugation reverses the evolution direction
    psi = make_fock_state(SpinConfig.from_string("00110100"))
    forward = evolve_rk4(h8, psi, 4.0, sample_every=1 << 30).states[-1]
    back = evolve_rk4(
        h8, StateVector(np.conj(forward.amplitudes), norm_tol=1e-4), 4.0, sample_every=1 << 30
    ).states[-1]
    assert np.linalg.norm(np.conj(back.amplitudes) - psi.amplitudes) < 1e-6


def test_rk4_boundary_populations_frozen(h8):
    from qgol import local_population

    psi = make_fock_state(SpinConfig.from_string("10110101"))
    profiles = []
    evolve_rk4(
        h8, psi, 5.0, sample_every=100,
        observer=lambda t, s: profiles.append(local_population(s)),
        keep_states=False,
    )
    profiles = np.array(profiles)
    for site in (1, 2, 7, 8):
        assert np.abs(profiles[:, site - 1] - profiles[0, site - 1]).max() < 1e-12


def test_rk4_lands_exactly_on_t_max(h5):
    tr = evolve_rk4(h5, make_fock_state(SpinConfig((0,) * 5)), np.pi / 4, sample_every=7)
    assert tr.times[-1] == np.pi / 4
    assert np.all(np.diff(tr.times) > 0) and tr.times[0] == 0.0


def test_rk4_aborts_on_blowup(h8):
    psi = make_fock_state(SpinConfig.from_string("01011010"))
    with pytest.warns(UserWarning, match="RK4"):
        with pytest.raises(IntegrationError):
            evolve_rk4(h8, psi, 40.0, dt=1.0, sample_every=5)


def test_rk4_validation(h5):
    psi = make_fock_state(SpinConfig((0,) * 5))
    with pytest.raises(ValueError):
        evolve_rk4(h5, psi, 1.0, dt=0.0)
    with pytest.raises(ValueError):
        evolve_rk4(h5, psi, -1.0)
    with pytest.raises(ValueError):
        evolve_rk4(h5, make_fock_state(SpinConfig((0,) * 6)), 1.0)


def test_evolve_exact_examples(h5):
    psi = make_fock_state(SpinConfig.from_string("01010"))
    assert np.allclose(evolve_exact(h5, psi, 0.0).amplitudes, psi.amplitudes)
    dead = make_fock_state(SpinConfig((0,) * 5))
    assert np.allclose(evolve_exact(h5, dead, 7.3).amplitudes, dead.amplitudes)
    swapped = evolve_exact(h5, psi, np.pi / 2)
    target = make_fock_state(SpinConfig.from_string("01110"))
    assert abs(overlap(target, swapped)) == pytest.approx(1.0, abs=1e-12)


def test_evolve_exact_size_guard():
    from qgol import build_hamiltonian

    h = build_hamiltonian(11)
    with pytest.raises(ValueError):
        evolve_exact(h, make_fock_state(SpinConfig((0,) * 11)), 1.0)


def test_strobe_examples(h11, h8):
    dead = SpinConfig((0,) * 11)
    assert all(c == dead for c in stroboscopic_quantum(h11, dead, 4).steps)

    one = stroboscopic_quantum(h11, SpinConfig.from_string(BLINKER_11), 1)
    assert one.steps[1].to_string() == "00001110000"


def test_strobe_equals_classical_spot_checks(h8, rng):
    for _ in range(10):
        cfg = config_from_index(int(rng.integers(0, 1 << 8)), 8)
        strobe = stroboscopic_quantum(h8, cfg, 12)
        classical = classical_trajectory(cfg, 12)
        assert [c.bits for c in strobe.steps] == [c.bits for c in classical.steps]
