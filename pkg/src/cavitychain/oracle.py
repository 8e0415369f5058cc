"""Brute-force reference dynamics: dense build, eigendecompose, evolve.

This module never touches the closed-form mode machinery.  It assembles the
full 2N x 2N restricted Hamiltonian entrywise from its three tensor-product
terms and propagates states through a dense Hermitian eigendecomposition,
which is exact for the time-independent problem.  Every analytic formula in
the package is validated against it.
"""

from __future__ import annotations

import numpy as np

from .dynamics import SQRT2
from .lattice import adjacency
from .model import RestrictedState, SystemParams

_EVOLVE_NORM_TOL = 1e-8

#: dense diagonalization stays cheap (< seconds) up to this chain length
MAX_SITES = 2000

_PAULI_Z = np.diag([1.0, -1.0])
_PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])


class DenseRestrictedHamiltonian:
    """Dense restricted Hamiltonian with a cached eigendecomposition.

    Basis ordering is site-major with the atom component first:
    index 2(M-1) is |M>|e,0> and 2(M-1)+1 is |M>|g,2>.
    """

    def __init__(self, matrix: np.ndarray, params: SystemParams):
        matrix = np.asarray(matrix, dtype=float)
        matrix.flags.writeable = False
        self.matrix = matrix
        self.params = params
        self._eig = None

    @property
    def n_sites(self) -> int:
        return self.matrix.shape[0] // 2

    def eigensystem(self):
        """(eigenvalues, eigenvectors) of the dense matrix, cached."""
        if self._eig is None:
            self._eig = np.linalg.eigh(self.matrix)
        return self._eig


def build_hamiltonian(params: SystemParams) -> DenseRestrictedHamiltonian:
    """Assemble (Delta/2) I (x) Z + sqrt(2) lambda I (x) X + 2 xi A (x) |g,2><g,2|."""
    n = params.n_cavities
    eye = np.eye(n)
    photon_proj = (np.eye(2) - _PAULI_Z) / 2.0
    matrix = (np.kron(eye, params.detuning / 2.0 * _PAULI_Z)
              + np.kron(eye, SQRT2 * params.coupling * _PAULI_X)
              + np.kron(adjacency(params), 2.0 * params.hopping * photon_proj))
    return DenseRestrictedHamiltonian(matrix, params)


def evolve(hamiltonian: DenseRestrictedHamiltonian, state: RestrictedState,
           t: float) -> RestrictedState:
    """Propagate a state by e^{-iHt} through the eigendecomposition."""
    psi0 = state.as_vector()
    norm = float(np.linalg.norm(psi0))
    if abs(norm - 1.0) > _EVOLVE_NORM_TOL:
        raise ValueError(f"input state norm deviates from 1 by {abs(norm - 1.0):.3e}")
    energies, vectors = hamiltonian.eigensystem()
    psi_t = vectors @ (np.exp(-1j * energies * t) * (vectors.T.conj() @ psi0))
    return RestrictedState.from_vector(psi_t)


def evolved_populations(hamiltonian: DenseRestrictedHamiltonian,
                        state: RestrictedState, times) -> tuple[np.ndarray, np.ndarray]:
    """(p_atom, p_photon) arrays of shape (T, N) on a time grid."""
    energies, vectors = hamiltonian.eigensystem()
    coefficients = vectors.T.conj() @ state.as_vector()
    grid = np.atleast_1d(np.asarray(times, dtype=float))
    phases = np.exp(-1j * np.outer(grid, energies))     # (T, 2N)
    states = phases * coefficients @ vectors.T           # (T, 2N)
    return np.abs(states[:, 0::2]) ** 2, np.abs(states[:, 1::2]) ** 2
