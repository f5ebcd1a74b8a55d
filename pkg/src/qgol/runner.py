"""Experiment runner: validated configurations, seeded ensembles, CSV and
manifest output.

Every run is deterministic given (config, seed): per-sample random streams
are derived from (master seed, sample index), aggregation follows sample
order, and floats are printed at full precision, so numeric output is
byte-identical regardless of the worker count.
"""

from __future__ import annotations

import functools
import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import floor
from pathlib import Path

import numpy as np

from ._version import __version__
from .circulant import commensurability_check, ring_eigensystem, ring_evolution
from .dynamics import (
    CLASSICAL_STEP,
    classical_trajectory,
    evolve_rk4,
    stroboscopic_quantum,
)
from .hamiltonian import build_hamiltonian
from .lattice import SpinConfig, make_fock_state
from .observables import (
    alive_cluster_function,
    dead_cluster_function,
    density,
    discretize,
    diversity,
    improved_diversity,
    local_population,
)
from .quantum_info import (
    average_concurrence,
    bond_entropy,
    mutual_information_matrix,
    single_site_entropies,
)

MAX_SITES = 24  # 2**L complex amplitudes; beyond this the engine refuses

KINDS = ("evolve", "classical", "strobe", "ensemble", "circulant")
MEASURES = ("populations", "clusters", "diversity", "entropies", "mi", "concurrence", "bonds")

QUANTUM_WINDOW = (25.0, 30.0)
CLASSICAL_WINDOW = (83.0, 100.0)


@dataclass
class RunConfig:
    """Everything a run needs; see `validate` for the invariants."""

    kind: str
    L: int = 11
    initial: str | None = None
    rho0: float | None = None
    t_max: float = 30.0
    dt: float = 0.01
    sample_every: int = 25
    steps: int = 20
    samples: int = 16
    seed: int | None = None
    measures: tuple[str, ...] = ("populations",)
    window: tuple[float, float] | None = None
    concurrence_distances: tuple[int, ...] = (1,)
    bonds: tuple[int, ...] | None = None
    out_dir: str = "runs"
    workers: int = 1
    # ring-model parameters
    period: int = 4
    hopping: float = 1.0
    k0: int = 0
    q_max: int = 10**6
    tolerance: float = 1e-9

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}; choose from {KINDS}")
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.rho0 is not None and not 0.0 <= self.rho0 <= 1.0:
            raise ValueError(f"initial density {self.rho0} outside [0, 1]")
        if self.kind in ("evolve", "classical", "strobe", "ensemble"):
            if self.L > MAX_SITES:
                raise ValueError(f"L = {self.L} exceeds the memory bound (L <= {MAX_SITES})")
            if self.kind == "ensemble" or (self.initial is None and self.rho0 is not None):
                if self.rho0 is None:
                    raise ValueError("ensemble runs need an initial density rho0")
                if self.seed is None:
                    raise ValueError("random initial states need a seed")
            elif self.initial is None:
                raise ValueError(f"{self.kind} runs need an initial bitstring")
            if self.initial is not None and len(self.initial) != self.L:
                raise ValueError(
                    f"invalid bitstring length: {len(self.initial)} for L = {self.L}"
                )
        unknown = set(self.measures) - set(MEASURES)
        if unknown:
            raise ValueError(f"unknown measures {sorted(unknown)}; choose from {MEASURES}")
        if self.window is not None and self.window[0] > self.window[1]:
            raise ValueError(f"window {self.window} is empty")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class EnsembleResult:
    """Per-sample equilibrium scalars with their means and standard errors."""

    samples: list[dict]
    means: dict[str, float]
    standard_errors: dict[str, float]
    quantum_window: tuple[float, float]
    classical_window: tuple[float, float]


def sample_random_fock(L: int, rho0: float, rng: np.random.Generator) -> SpinConfig:
    """Random configuration with exactly round(rho0 * L) alive cells.

    The exact count (rather than independent per-site coins) pins the
    initial density of every sample; alive cells may land on the frozen
    boundary sites, where the dynamics simply never changes them.
    """
    if not 0.0 <= rho0 <= 1.0:
        raise ValueError(f"target density {rho0} outside [0, 1]")
    n_alive = int(floor(rho0 * L + 0.5))
    bits = np.zeros(L, dtype=int)
    if n_alive:
        bits[rng.choice(L, size=n_alive, replace=False)] = 1
    return SpinConfig(tuple(int(b) for b in bits))


def sample_rng(master_seed: int, sample_index: int) -> np.random.Generator:
    """Per-sample stream derived from (master seed, sample index)."""
    return np.random.default_rng([master_seed, sample_index])


def equilibrium_average(times, values, window) -> float:
    """Arithmetic mean of the samples with window[0] <= t <= window[1]."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    mask = (times >= window[0]) & (times <= window[1])
    if not mask.any():
        raise ValueError(f"no samples inside the window {window}")
    return float(values[mask].mean())


# ---------------------------------------------------------------------------
# output helpers


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(_fmt(v) for v in row) + "\n")


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    digest.update(path.read_bytes())
    return digest.hexdigest()


@functools.lru_cache(maxsize=4)
def _cached_hamiltonian(L: int):
    return build_hamiltonian(L)


def _initial_config(config: RunConfig) -> SpinConfig:
    if config.initial is not None:
        return SpinConfig.from_string(config.initial)
    rng = sample_rng(config.seed, 0)
    return sample_random_fock(config.L, config.rho0, rng)


# ---------------------------------------------------------------------------
# measure recording for a single quantum trajectory


class _MeasureRecorder:
    """Accumulates one row per snapshot for every requested measure."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.rows = {name: [] for name in config.measures}

    def observe(self, t: float, state) -> None:
        cfg = self.config
        needs_profile = {"populations", "clusters", "diversity"} & set(cfg.measures)
        profile = local_population(state) if needs_profile else None
        if "populations" in cfg.measures:
            self.rows["populations"].append([t, *profile])
        if "clusters" in cfg.measures or "diversity" in cfg.measures:
            d = discretize(profile)
            if "clusters" in cfg.measures:
                alive = [alive_cluster_function(d, l) for l in range(1, cfg.L + 1)]
                dead = [dead_cluster_function(d, l) for l in range(1, cfg.L + 1)]
                self.rows["clusters"].append([t, *alive, *dead])
            if "diversity" in cfg.measures:
                self.rows["diversity"].append(
                    [t, density(d), diversity(d), improved_diversity(d)]
                )
        if "entropies" in cfg.measures:
            self.rows["entropies"].append([t, *single_site_entropies(state)])
        if "mi" in cfg.measures:
            mi = mutual_information_matrix(state)
            for i in range(cfg.L):
                for j in range(i + 1, cfg.L):
                    self.rows["mi"].append([t, i + 1, j + 1, mi[i, j]])
        if "concurrence" in cfg.measures:
            values = [average_concurrence(state, d) for d in self.config.concurrence_distances]
            self.rows["concurrence"].append([t, *values])
        if "bonds" in cfg.measures:
            bonds = self.config.bonds or tuple(range(1, cfg.L))
            self.rows["bonds"].append([t, *(bond_entropy(state, j) for j in bonds)])

    def headers(self) -> dict[str, list[str]]:
        cfg = self.config
        sites = [f"n_{i}" for i in range(1, cfg.L + 1)]
        out = {}
        if "populations" in cfg.measures:
            out["populations"] = ["time", *sites]
        if "clusters" in cfg.measures:
            out["clusters"] = (
                ["time"]
                + [f"alive_{l}" for l in range(1, cfg.L + 1)]
                + [f"dead_{l}" for l in range(1, cfg.L + 1)]
            )
        if "diversity" in cfg.measures:
            out["diversity"] = ["time", "density", "diversity", "improved_diversity"]
        if "entropies" in cfg.measures:
            out["entropies"] = ["time"] + [f"S_{i}" for i in range(1, cfg.L + 1)]
        if "mi" in cfg.measures:
            out["mi"] = ["time", "i", "j", "value"]
        if "concurrence" in cfg.measures:
            out["concurrence"] = ["time"] + [f"C_{d}" for d in self.config.concurrence_distances]
        if "bonds" in cfg.measures:
            bonds = self.config.bonds or tuple(range(1, cfg.L))
            out["bonds"] = ["time"] + [f"bond_{j}" for j in bonds]
        return out


# ---------------------------------------------------------------------------
# the experiment kinds


def _run_evolve(config: RunConfig, out: Path) -> tuple[dict, dict]:
    h = _cached_hamiltonian(config.L)
    initial = make_fock_state(_initial_config(config))
    recorder = _MeasureRecorder(config)
    trajectory = evolve_rk4(
        h,
        initial,
        t_max=config.t_max,
        dt=config.dt,
        sample_every=config.sample_every,
        observer=recorder.observe,
        keep_states=False,
    )
    files = {}
    for name, header in recorder.headers().items():
        path = out / f"{name}.csv"
        _write_csv(path, header, recorder.rows[name])
        files[name] = path
    summary = {
        "snapshots": len(trajectory.times),
        "norm_drift": trajectory.norm_drift,
    }
    return files, summary


def _classical_rows(traj, L: int):
    rows = []
    for k, cfg in enumerate(traj.steps):
        d = np.array(cfg.bits, dtype=np.int8)
        rows.append(
            [k, k * CLASSICAL_STEP, cfg.to_string(), density(d), diversity(d), improved_diversity(d)]
        )
    return rows


_CLASSICAL_HEADER = ["step", "time", "config", "density", "diversity", "improved_diversity"]


def _run_classical(config: RunConfig, out: Path) -> tuple[dict, dict]:
    traj = classical_trajectory(_initial_config(config), config.steps)
    path = out / "classical.csv"
    _write_csv(path, _CLASSICAL_HEADER, _classical_rows(traj, config.L))
    return {"classical": path}, {"steps": config.steps}


def _run_strobe(config: RunConfig, out: Path) -> tuple[dict, dict]:
    h = _cached_hamiltonian(config.L)
    traj = stroboscopic_quantum(h, _initial_config(config), config.steps)
    path = out / "strobe.csv"
    _write_csv(path, _CLASSICAL_HEADER, _classical_rows(traj, config.L))
    return {"strobe": path}, {"steps": config.steps}


def _ensemble_sample(args) -> dict:
    """One ensemble member: quantum and classical equilibrium scalars."""
    config, index = args
    rng = sample_rng(config.seed, index)
    initial = sample_random_fock(config.L, config.rho0, rng)
    h = _cached_hamiltonian(config.L)
    quantum_window = config.window or QUANTUM_WINDOW

    series = {"density": [], "diversity": [], "improved_diversity": []}

    def observe(t, state):
        d = discretize(local_population(state))
        series["density"].append(density(d))
        series["diversity"].append(diversity(d))
        series["improved_diversity"].append(improved_diversity(d))

    trajectory = evolve_rk4(
        h,
        make_fock_state(initial),
        t_max=config.t_max,
        dt=config.dt,
        sample_every=config.sample_every,
        observer=observe,
        keep_states=False,
    )
    record = {"sample": index, "config": initial.to_string()}
    for name, values in series.items():
        record[f"{name}_equi_quantum"] = equilibrium_average(
            trajectory.times, values, quantum_window
        )

    classical_steps = int(floor(CLASSICAL_WINDOW[1] / CLASSICAL_STEP))
    ctraj = classical_trajectory(initial, classical_steps)
    times = ctraj.times
    cvalues = {"density": [], "diversity": [], "improved_diversity": []}
    for cfg in ctraj.steps:
        d = np.array(cfg.bits, dtype=np.int8)
        cvalues["density"].append(density(d))
        cvalues["diversity"].append(diversity(d))
        cvalues["improved_diversity"].append(improved_diversity(d))
    for name, values in cvalues.items():
        record[f"{name}_equi_classical"] = equilibrium_average(
            times, values, CLASSICAL_WINDOW
        )
    record["norm_drift"] = trajectory.norm_drift
    return record


_SCALARS = [
    "density_equi_quantum",
    "diversity_equi_quantum",
    "improved_diversity_equi_quantum",
    "density_equi_classical",
    "diversity_equi_classical",
    "improved_diversity_equi_classical",
]


def run_ensemble(config: RunConfig) -> EnsembleResult:
    """Evolve `samples` random Fock states and average their equilibria.

    Each sample runs the Schrodinger engine (averaged over the quantum
    window) and the classical automaton (averaged over the classical
    window of step times k*pi/2).  Samples are independent; with
    ``workers > 1`` they run in parallel with identical numeric results.
    """
    config.validate()
    jobs = [(config, k) for k in range(config.samples)]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_ensemble_sample, jobs))
    else:
        records = [_ensemble_sample(job) for job in jobs]
    means, errors = {}, {}
    for key in _SCALARS:
        values = np.array([r[key] for r in records])
        means[key] = float(values.mean())
        errors[key] = (
            float(values.std(ddof=1) / np.sqrt(len(values))) if len(values) > 1 else 0.0
        )
    return EnsembleResult(
        samples=records,
        means=means,
        standard_errors=errors,
        quantum_window=config.window or QUANTUM_WINDOW,
        classical_window=CLASSICAL_WINDOW,
    )


def _run_ensemble(config: RunConfig, out: Path) -> tuple[dict, dict]:
    result = run_ensemble(config)
    header = ["sample", "config", *_SCALARS, "norm_drift"]
    rows = [[r["sample"], r["config"], *(r[k] for k in _SCALARS), r["norm_drift"]] for r in result.samples]
    path = out / "ensemble.csv"
    _write_csv(path, header, rows)
    summary_path = out / "ensemble_summary.csv"
    _write_csv(
        summary_path,
        ["quantity", "mean", "standard_error"],
        [[k, result.means[k], result.standard_errors[k]] for k in _SCALARS],
    )
    summary = {
        "means": result.means,
        "standard_errors": result.standard_errors,
        "quantum_window": list(result.quantum_window),
        "classical_window": list(result.classical_window),
    }
    return {"ensemble": path, "ensemble_summary": summary_path}, summary


def _run_circulant(config: RunConfig, out: Path) -> tuple[dict, dict]:
    model = ring_eigensystem(config.period, config.hopping)
    files = {}
    path = out / "eigenvalues.csv"
    _write_csv(
        path,
        ["m", "energy"],
        [[m, model.eigenvalues[m]] for m in range(model.n)],
    )
    files["eigenvalues"] = path

    report = commensurability_check(config.period, config.tolerance, config.q_max)
    rows = []
    count = len(report.gaps)
    for a in range(count):
        for b in range(count):
            frac = report.fractions[a * count + b]
            rows.append(
                [
                    a,
                    b,
                    report.gaps[a],
                    report.gaps[b],
                    report.ratios[a, b],
                    report.rational[a, b],
                    frac.numerator if frac is not None else "",
                    frac.denominator if frac is not None else "",
                ]
            )
    path = out / "gap_ratios.csv"
    _write_csv(path, ["a", "b", "gap_a", "gap_b", "ratio", "rational", "p", "q"], rows)
    files["gap_ratios"] = path

    times = np.arange(0.0, config.t_max + 0.5 * config.dt, config.dt)
    rows = [[t, *ring_evolution(model, config.k0, t)] for t in times]
    path = out / "ring_evolution.csv"
    _write_csv(path, ["time"] + [f"p_{k}" for k in range(model.n)], rows)
    files["ring_evolution"] = path

    summary = {
        "period": config.period,
        "commensurate": bool(report.commensurate),
        "gaps": [float(g) for g in report.gaps],
    }
    return files, summary


_RUNNERS = {
    "evolve": _run_evolve,
    "classical": _run_classical,
    "strobe": _run_strobe,
    "ensemble": _run_ensemble,
    "circulant": _run_circulant,
}


def run(config: RunConfig) -> dict:
    """Execute a configured experiment; returns the manifest record.

    Writes one CSV per measure plus ``manifest.json`` (full configuration,
    code version, wall time, and a content hash per output file) into the
    output directory.
    """
    config.validate()
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()
    files, summary = _RUNNERS[config.kind](config, out)
    manifest = {
        "config": asdict(config),
        "version": __version__,
        "wall_time_seconds": time.perf_counter() - started,
        "summary": summary,
        "files": [
            {"name": path.name, "sha256": _sha256(path)} for path in files.values()
        ],
    }
    with open(out / "manifest.json", "w", encoding="utf-8") as f:
        json.dump(manifest, f, indent=2, default=str)
        f.write("\n")
    return manifest
