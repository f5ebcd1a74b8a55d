import json

import numpy as np
import pytest

from qgol import (
    RunConfig,
    SpinConfig,
    classical_trajectory,
    equilibrium_average,
    run,
    run_ensemble,
    sample_random_fock,
)
from qgol.cli import main, read_config_file
from qgol.runner import sample_rng


def test_sample_random_fock_extremes(rng):
    assert sample_random_fock(8, 0.0, rng).bits == (0,) * 8
    assert sample_random_fock(8, 1.0, rng).bits == (1,) * 8
    cfg = sample_random_fock(16, 0.25, rng)
    assert sum(cfg.bits) == 4


def test_sample_random_fock_marginals():
    # each site's alive frequency approaches rho0 within 3 sigma
    trials, L, rho0 = 2000, 12, 0.25
    counts = np.zeros(L)
    for k in range(trials):
        counts += sample_random_fock(L, rho0, sample_rng(99, k)).bits
    sigma = np.sqrt(trials * rho0 * (1 - rho0))
    assert np.abs(counts - trials * rho0).max() < 3.5 * sigma


def test_sample_random_fock_validation(rng):
    with pytest.raises(ValueError):
        sample_random_fock(8, 1.2, rng)


def test_equilibrium_average():
    times = np.arange(0.0, 10.0, 0.5)
    values = np.full_like(times, 0.7)
    assert equilibrium_average(times, values, (2.0, 8.0)) == 0.7
    values = times.copy()
    assert equilibrium_average(times, values, (4.0, 6.0)) == pytest.approx(5.0)
    with pytest.raises(ValueError):
        equilibrium_average(times, values, (11.0, 12.0))


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(kind="zap").validate()
    with pytest.raises(ValueError):
        RunConfig(kind="evolve", L=25, initial="0" * 25).validate()
    with pytest.raises(ValueError):
        RunConfig(kind="evolve", L=11, initial="111").validate()
    with pytest.raises(ValueError):
        RunConfig(kind="ensemble", L=8, rho0=0.5).validate()  # missing seed
    with pytest.raises(ValueError):
        RunConfig(kind="evolve", L=8, initial="0" * 8, dt=-0.1).validate()
    with pytest.raises(ValueError):
        RunConfig(kind="evolve", L=8, initial="0" * 8, measures=("bogus",)).validate()


def test_evolve_run_shapes(tmp_path):
    config = RunConfig(
        kind="evolve",
        L=11,
        initial="00001010000",
        t_max=2.0,
        sample_every=50,
        measures=("populations", "clusters", "diversity", "bonds", "concurrence"),
        out_dir=str(tmp_path),
    )
    manifest = run(config)
    pops = (tmp_path / "populations.csv").read_text().splitlines()
    assert pops[0] == "time," + ",".join(f"n_{i}" for i in range(1, 12))
    assert len(pops) - 1 == 5  # t = 0, 0.5, 1.0, 1.5, 2.0
    assert (tmp_path / "manifest.json").exists()
    names = {f["name"] for f in manifest["files"]}
    assert names == {
        "populations.csv",
        "clusters.csv",
        "diversity.csv",
        "bonds.csv",
        "concurrence.csv",
    }


def test_classical_run_matches_trajectory(tmp_path):
    config = RunConfig(
        kind="classical", L=11, initial="00001010000", steps=5, out_dir=str(tmp_path)
    )
    run(config)
    lines = (tmp_path / "classical.csv").read_text().splitlines()
    assert len(lines) - 1 == 6
    traj = classical_trajectory(SpinConfig.from_string("00001010000"), 5)
    for line, cfg in zip(lines[1:], traj.steps):
        assert line.split(",")[2] == cfg.to_string()


def test_strobe_run_equals_classical(tmp_path):
    common = dict(L=9, initial="001011010", steps=8)
    run(RunConfig(kind="classical", out_dir=str(tmp_path / "c"), **common))
    run(RunConfig(kind="strobe", out_dir=str(tmp_path / "s"), **common))
    classical = (tmp_path / "c" / "classical.csv").read_text()
    strobe = (tmp_path / "s" / "strobe.csv").read_text()
    assert classical == strobe


def test_ensemble_deterministic_and_worker_independent(tmp_path):
    base = dict(
        kind="ensemble", L=8, rho0=0.5, samples=4, seed=42,
        t_max=2.0, sample_every=20, window=(1.0, 2.0),
    )
    a = run(RunConfig(out_dir=str(tmp_path / "a"), **base))
    b = run(RunConfig(out_dir=str(tmp_path / "b"), **base))
    c = run(RunConfig(out_dir=str(tmp_path / "c"), workers=2, **base))
    read = lambda d: (tmp_path / d / "ensemble.csv").read_bytes()
    assert read("a") == read("b") == read("c")
    assert a["summary"]["means"] == b["summary"]["means"] == c["summary"]["means"]


def test_ensemble_result_fields():
    config = RunConfig(
        kind="ensemble", L=8, rho0=0.25, samples=3, seed=7,
        t_max=1.0, sample_every=10, window=(0.5, 1.0),
    )
    result = run_ensemble(config)
    assert len(result.samples) == 3
    for record in result.samples:
        assert sum(int(b) for b in record["config"]) == 2  # round(0.25 * 8)
    assert set(result.means) == set(result.standard_errors)
    assert result.quantum_window == (0.5, 1.0)
    assert result.classical_window == (83.0, 100.0)


def test_manifest_hashes(tmp_path):
    import hashlib

    config = RunConfig(
        kind="classical", L=11, initial="00001010000", steps=3, out_dir=str(tmp_path)
    )
    manifest = run(config)
    for entry in manifest["files"]:
        digest = hashlib.sha256((tmp_path / entry["name"]).read_bytes()).hexdigest()
        assert digest == entry["sha256"]


def test_circulant_run(tmp_path):
    config = RunConfig(kind="circulant", period=4, t_max=1.0, dt=0.1, out_dir=str(tmp_path))
    manifest = run(config)
    assert manifest["summary"]["commensurate"] is True
    evo = (tmp_path / "ring_evolution.csv").read_text().splitlines()
    assert evo[0] == "time,p_0,p_1,p_2,p_3"
    assert len(evo) - 1 == 11
    eig = (tmp_path / "eigenvalues.csv").read_text().splitlines()
    assert len(eig) - 1 == 4


def test_cli_evolve_and_errors(tmp_path, capsys):
    out = tmp_path / "run"
    code = main(
        [
            "evolve",
            "--length", "11",
            "--initial", "00001010000",
            "--tmax", "1.0",
            "--sample-every", "50",
            "--measures", "populations",
            "--out", str(out),
        ]
    )
    assert code == 0
    manifest = json.loads(capsys.readouterr().out)
    assert manifest["config"]["L"] == 11
    assert (out / "populations.csv").exists()

    code = main(["evolve", "--length", "9", "--initial", "111", "--out", str(tmp_path / "x")])
    captured = capsys.readouterr()
    assert code != 0
    record = json.loads(captured.err)
    assert record["error"] == "ValueError"
    assert "bitstring" in record["message"]


def test_cli_memory_bound(tmp_path, capsys):
    code = main(["evolve", "--length", "30", "--initial", "0" * 30, "--out", str(tmp_path)])
    assert code != 0
    assert "memory bound" in json.loads(capsys.readouterr().err)["message"]


def test_cli_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "L = 11\n"
        "initial = 00001010000\n"
        "t_max = 0.5  # short smoke run\n"
        "sample_every = 25\n"
        "measures = populations,diversity\n"
    )
    parsed = read_config_file(cfg)
    assert parsed["measures"] == ("populations", "diversity")
    out = tmp_path / "out"
    code = main(
        ["evolve", "--config", str(cfg), "--tmax", "1.0", "--out", str(out)]
    )
    assert code == 0
    manifest = json.loads(capsys.readouterr().out)
    assert manifest["config"]["t_max"] == 1.0  # flag wins over the file
    assert (out / "diversity.csv").exists()


def test_cli_measures_all(tmp_path, capsys):
    out = tmp_path / "all"
    code = main(
        [
            "evolve",
            "--length", "8",
            "--initial", "00101100",
            "--tmax", "0.5",
            "--sample-every", "25",
            "--measures", "all",
            "--out", str(out),
        ]
    )
    assert code == 0
    capsys.readouterr()
    for name in ("populations", "clusters", "diversity", "entropies", "mi", "concurrence", "bonds"):
        assert (out / f"{name}.csv").exists()
