"""Hamiltonian of the quantum Game of Life chain with open boundaries.

Two basis configurations are coupled, with unit matrix element, exactly
when they differ at one bulk site i in [3, L-2] whose four nearest and
next-nearest neighbours contain two or three alive cells.  Sites 1, 2,
L-1 and L never flip, so their occupation is a constant of motion.

The production operator is pure structure (all couplings equal 1) held in
row-sorted sparse form; `dense_hamiltonian` re-assembles the same operator
from the literal projector products as an independent test oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .lattice import MIN_SITES, SpinConfig, _amplitudes

_PROJ_ALIVE = np.array([[0.0, 0.0], [0.0, 1.0]])
_PROJ_DEAD = np.array([[1.0, 0.0], [0.0, 0.0]])
_FLIP = np.array([[0.0, 1.0], [1.0, 0.0]])

#: Largest lattice the dense oracle assembly will attempt.
DENSE_MAX_SITES = 10


def alive_neighbors(config: SpinConfig, i: int) -> int:
    """Alive cells among sites i-2, i-1, i+1, i+2 (site i itself excluded).

    ``i`` must lie in the bulk range [3, L-2]; the count is in [0, 4].
    """
    L = config.L
    if not 3 <= i <= L - 2:
        raise ValueError(f"site {i} outside the bulk range [3, {L - 2}]")
    b = config.bits
    return b[i - 3] + b[i - 2] + b[i] + b[i + 1]


@dataclass(frozen=True)
class SparseHamiltonian:
    """Symmetric 0/1 coupling structure of the rule Hamiltonian (hbar = 1)."""

    L: int
    matrix: sp.csr_matrix  # float64 data, every stored entry equal to 1

    @property
    def dim(self) -> int:
        return 1 << self.L

    @property
    def n_couplings(self) -> int:
        return self.matrix.nnz

    def couplings(self) -> tuple[np.ndarray, np.ndarray]:
        """All ordered coupling pairs as (rows, cols) arrays."""
        coo = self.matrix.tocoo()
        return coo.row.copy(), coo.col.copy()

    def to_dense(self) -> np.ndarray:
        if self.L > DENSE_MAX_SITES:
            raise ValueError(f"refusing dense conversion above L = {DENSE_MAX_SITES}")
        return self.matrix.toarray()


def build_hamiltonian(L: int) -> SparseHamiltonian:
    """Enumerate all (configuration, bulk site) flip couplings for ``L`` sites.

    For every basis index and every site i in [3, L-2] whose neighbourhood
    holds 2 or 3 alive cells, the pair (index, index with bit i flipped)
    becomes a coupling.  Construction is vectorized over the basis,
    O(2**L * L) time.
    """
    if L < MIN_SITES:
        raise ValueError(f"lattice needs at least {MIN_SITES} sites, got {L}")
    dim = 1 << L
    idx = np.arange(dim, dtype=np.int64)
    bits = [((idx >> j) & 1).astype(np.int8) for j in range(L)]
    rows, cols = [], []
    for site in range(3, L - 1):  # bulk sites 3 .. L-2; site s lives at bit s-1
        nb = bits[site - 3] + bits[site - 2] + bits[site] + bits[site + 1]
        hit = (nb == 2) | (nb == 3)
        r = idx[hit]
        rows.append(r)
        cols.append(r ^ (1 << (site - 1)))
    row = np.concatenate(rows)
    col = np.concatenate(cols)
    matrix = sp.coo_matrix(
        (np.ones(row.size), (row, col)), shape=(dim, dim)
    ).tocsr()
    return SparseHamiltonian(L=L, matrix=matrix)


def apply_hamiltonian(h: SparseHamiltonian, state) -> np.ndarray:
    """Matrix-vector product H @ psi; the result is not normalized.

    The stored structure is real, so a complex vector is propagated through
    two real products (no complex copy of the matrix is ever made).
    """
    x = _amplitudes(state)
    if x.shape != (h.dim,):
        raise ValueError(f"dimension mismatch: state {x.shape}, H dim {h.dim}")
    if np.iscomplexobj(x):
        return h.matrix @ x.real + 1j * (h.matrix @ x.imag)
    return h.matrix @ x


def energy_expectation(h: SparseHamiltonian, state) -> float:
    """<psi|H|psi> (real for any state since H is real symmetric)."""
    x = _amplitudes(state)
    return float(np.vdot(x, apply_hamiltonian(h, x)).real)


def _site_operator(op: np.ndarray, site: int, L: int) -> np.ndarray:
    """Dense one-site operator embedded in the full 2**L space."""
    out = np.array([[1.0]])
    for s in range(1, L + 1):  # site L ends up most significant, matching fock_index
        out = np.kron(op if s == site else np.eye(2), out)
    return out


def dense_hamiltonian(L: int) -> np.ndarray:
    """Assemble H from the literal projector products (test oracle only).

    Sums, over every bulk site, the flip operator times the ten projector
    products that mark two or three alive neighbours.  Exponential cost;
    refuses L > 10.
    """
    if not MIN_SITES <= L <= DENSE_MAX_SITES:
        raise ValueError(f"dense assembly supports {MIN_SITES} <= L <= {DENSE_MAX_SITES}")
    dim = 1 << L
    site_bit = [((np.arange(dim) >> (s - 1)) & 1) for s in range(L + 1)]  # 1-indexed
    H = np.zeros((dim, dim))
    for i in range(3, L - 1):
        neighbours = (i - 2, i - 1, i + 1, i + 2)
        projector_diag = np.zeros(dim)
        for pattern in itertools.product((0, 1), repeat=4):
            if sum(pattern) not in (2, 3):
                continue
            indicator = np.ones(dim)
            for s, want in zip(neighbours, pattern):
                indicator *= site_bit[s] == want  # diag of n-hat / nbar-hat at s
            projector_diag += indicator
        # S_i @ diag(projector): right-multiplying by a diagonal scales columns
        H += _site_operator(_FLIP, i, L) * projector_diag[None, :]
    return H


def couplings_to_csv(h: SparseHamiltonian, path) -> None:
    """Diagnostic dump of the coupling list as (row, col) CSV rows."""
    rows, cols = h.couplings()
    with open(path, "w", encoding="utf-8") as f:
        f.write("row,col\n")
        for r, c in zip(rows, cols):
            f.write(f"{r},{c}\n")


def frozen_sector(h: SparseHamiltonian, low_bits: int, high_bits: int):
    """Basis indices and restricted matrix for fixed boundary occupations.

    ``low_bits`` carries sites (1, 2) and ``high_bits`` sites (L-1, L).
    H is exactly block diagonal over these sectors because no coupling
    touches the boundary sites.
    """
    L = h.L
    if not 0 <= low_bits < 4 or not 0 <= high_bits < 4:
        raise ValueError("boundary bit patterns must be two-bit values")
    interior = np.arange(1 << (L - 4), dtype=np.int64)
    indices = low_bits | (interior << 2) | (high_bits << (L - 2))
    sub = h.matrix[indices][:, indices].tocsr()
    return indices, sub
