import numpy as np
import pytest

from qgol import build_hamiltonian


@pytest.fixture(scope="session")
def h5():
    return build_hamiltonian(5)


@pytest.fixture(scope="session")
def h8():
    return build_hamiltonian(8)


@pytest.fixture(scope="session")
def h11():
    return build_hamiltonian(11)


@pytest.fixture()
def rng():
    return np.random.default_rng(20260810)


def random_state(rng, L):
    amps = rng.normal(size=1 << L) + 1j * rng.normal(size=1 << L)
    return amps / np.linalg.norm(amps)
