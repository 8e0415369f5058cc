"""Core domain types and the single-cavity two-photon Jaynes-Cummings spectrum.

Energies are angular frequencies with hbar = 1.  A cavity hosts a two-level
emitter (metastable |e>, ground |g>) coupled to its field mode by
simultaneous two-photon exchange; an array of N such cavities is linked by
two-photon tunneling of strength xi.  All array dynamics in this package
live in the restricted subspace spanned by |M> (x) |e,0> and |M> (x) |g,2>,
M = 1..N: exactly one atomic excitation or one photon pair in the chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

UNIFORM = "uniform"
STAGGERED = "staggered"

_NORM_TOL = 1e-10


def effective_coupling(g1: float, g2: float, delta: float) -> float:
    """Two-photon coupling strength g1*g2/delta from the raw dipole couplings.

    Valid only in the dispersive regime where the intermediate atomic level
    (detuned by ``delta``) can be adiabatically eliminated; ``delta = 0``
    is rejected because the elimination breaks down there.
    """
    if delta == 0:
        raise ValueError("zero intermediate-state detuning: adiabatic "
                         "elimination is invalid, effective coupling undefined")
    return g1 * g2 / delta


@dataclass(frozen=True)
class SystemParams:
    """Constants of the coupled-cavity chain model.

    Attributes
    ----------
    n_cavities : int
        Chain length N >= 1 (odd required for the staggered pattern).
    coupling : float
        Two-photon atom-field coupling lambda >= 0.
    hopping : float
        Intercavity photon-pair tunneling xi >= 0.
    detuning : float
        Delta = omega_a - 2*omega_c.
    beta : float
        Mixing angle of the injected state in the first cavity,
        cos(beta)|g,2> + sin(beta)|e,0>, restricted to [0, pi/2].
    pattern : str
        "uniform" or "staggered" bond pattern.
    kappa : float or None
        Bond distortion for the staggered pattern, strictly inside (-1, 1);
        bond (i, i+1) carries weight 1 - kappa*(-1)**i.  Must be None for
        the uniform pattern.
    """

    n_cavities: int
    coupling: float
    hopping: float
    detuning: float = 0.0
    beta: float = 0.0
    pattern: str = UNIFORM
    kappa: float | None = None

    def __post_init__(self):
        if self.n_cavities < 1:
            raise ValueError(f"n_cavities must be >= 1, got {self.n_cavities}")
        if self.coupling < 0:
            raise ValueError(f"coupling must be >= 0, got {self.coupling}")
        if self.hopping < 0:
            raise ValueError(f"hopping must be >= 0, got {self.hopping}")
        if not 0.0 <= self.beta <= math.pi / 2:
            raise ValueError(f"beta must lie in [0, pi/2], got {self.beta}")
        if self.pattern == UNIFORM:
            if self.kappa is not None:
                raise ValueError("kappa is only meaningful for the staggered pattern")
        elif self.pattern == STAGGERED:
            if self.kappa is None:
                raise ValueError("staggered pattern requires kappa")
            if not -1.0 < self.kappa < 1.0:
                raise ValueError(f"kappa must lie strictly in (-1, 1), got {self.kappa}")
            if self.n_cavities % 2 == 0:
                raise ValueError("staggered pattern requires an odd number of "
                                 f"cavities, got {self.n_cavities}")
        else:
            raise ValueError(f"unknown hopping pattern {self.pattern!r}")

    @property
    def is_staggered(self) -> bool:
        return self.pattern == STAGGERED


@dataclass(frozen=True)
class SingleCavityParams:
    """Inputs for the isolated-cavity spectrum in the n-photon sector.

    The dressed sector exists only for n >= 2: it is spanned by
    |e, n-2> and |g, n>.
    """

    omega_a: float
    omega_c: float
    coupling: float
    n_photons: int

    def __post_init__(self):
        if self.n_photons < 2:
            raise ValueError(f"dressed sector requires n_photons >= 2, got {self.n_photons}")

    @property
    def detuning(self) -> float:
        return self.omega_a - 2.0 * self.omega_c


@dataclass(frozen=True)
class DressedPair:
    """Eigen-pair of a 2x2 atom-field block.

    The mixing angle fixes the orthonormal eigenvectors: in the
    (|e, .>, |g, .>) basis the upper eigenvector is
    (cos(mixing_angle), sin(mixing_angle)) and the lower one is
    (-sin(mixing_angle), cos(mixing_angle)).
    """

    energy_plus: float
    energy_minus: float
    mixing_angle: float

    def __post_init__(self):
        if self.energy_plus < self.energy_minus:
            raise ValueError("energy_plus must be >= energy_minus")


def single_cavity_block(p: SingleCavityParams) -> np.ndarray:
    """2x2 sector Hamiltonian in the basis (|e, n-2>, |g, n>)."""
    n = p.n_photons
    off = p.coupling * math.sqrt(n * (n - 1))
    return np.array([
        [p.omega_a + (n - 2) * p.omega_c, off],
        [off, n * p.omega_c],
    ])


def jc_spectrum(p: SingleCavityParams) -> DressedPair:
    """Exact eigen-pair of the two-photon sector block.

    Diagonalizes the 2x2 sector matrix directly rather than evaluating a
    closed-form splitting, so the result stays correct at degeneracies and
    for every sign of the detuning.
    """
    h = single_cavity_block(p)
    energies, vectors = np.linalg.eigh(h)
    v_plus = vectors[:, 1]
    if v_plus[0] < 0 or (v_plus[0] == 0 and v_plus[1] < 0):
        v_plus = -v_plus
    angle = math.atan2(v_plus[1], v_plus[0])
    return DressedPair(energy_plus=float(energies[1]),
                       energy_minus=float(energies[0]),
                       mixing_angle=angle)


def dressed_vectors(pair: DressedPair) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal eigenvectors implied by a DressedPair's mixing angle."""
    c, s = math.cos(pair.mixing_angle), math.sin(pair.mixing_angle)
    return np.array([c, s]), np.array([-s, c])


class RestrictedState:
    """Unit-norm state over the 2N restricted basis.

    ``atom_amps[M-1]`` is the amplitude on |M> (x) |e,0> and
    ``photon_amps[M-1]`` the amplitude on |M> (x) |g,2>, for sites
    M = 1..N.  Arrays are stored read-only.
    """

    __slots__ = ("atom_amps", "photon_amps")

    def __init__(self, atom_amps, photon_amps):
        atom = np.array(atom_amps, dtype=complex)
        photon = np.array(photon_amps, dtype=complex)
        if atom.ndim != 1 or atom.shape != photon.shape:
            raise ValueError("atom_amps and photon_amps must be 1-d arrays of equal length")
        norm_sq = float(np.sum(np.abs(atom) ** 2 + np.abs(photon) ** 2))
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"state norm deviates from 1 by {abs(norm_sq - 1.0):.3e}")
        atom.flags.writeable = False
        photon.flags.writeable = False
        object.__setattr__(self, "atom_amps", atom)
        object.__setattr__(self, "photon_amps", photon)

    def __setattr__(self, name, value):
        raise AttributeError("RestrictedState is immutable")

    @property
    def n_sites(self) -> int:
        return self.atom_amps.shape[0]

    def populations(self) -> tuple[np.ndarray, np.ndarray]:
        """(atom, photon) occupation probabilities per site."""
        return np.abs(self.atom_amps) ** 2, np.abs(self.photon_amps) ** 2

    def as_vector(self) -> np.ndarray:
        """Interleaved 2N vector, site-major with the atom component first."""
        vec = np.empty(2 * self.n_sites, dtype=complex)
        vec[0::2] = self.atom_amps
        vec[1::2] = self.photon_amps
        return vec

    @classmethod
    def from_vector(cls, vec) -> "RestrictedState":
        vec = np.asarray(vec, dtype=complex)
        return cls(vec[0::2], vec[1::2])


def initial_state(params: SystemParams) -> RestrictedState:
    """Injected state: cos(beta)|g,2> + sin(beta)|e,0> in the first cavity."""
    return localized_state(params.n_cavities, 1, params.beta)


def localized_state(n_sites: int, site: int, beta: float) -> RestrictedState:
    """Entangled atom/photon-pair state localized in one cavity (1-indexed)."""
    if not 1 <= site <= n_sites:
        raise ValueError(f"site must lie in 1..{n_sites}, got {site}")
    atom = np.zeros(n_sites, dtype=complex)
    photon = np.zeros(n_sites, dtype=complex)
    atom[site - 1] = math.sin(beta)
    photon[site - 1] = math.cos(beta)
    return RestrictedState(atom, photon)
