"""Open-chain adjacency matrices and their analytic eigen-decompositions.

The hopping pattern of the chain is encoded in a symmetric adjacency matrix
with zero diagonal and nearest-neighbour bonds only.  Because the array
Hamiltonian acts on the photon component through this matrix alone, its
eigenmodes decouple the full dynamics into independent 2x2 blocks; this
module provides those modes in closed form for the uniform chain and for
the bond-alternating (staggered) chain with odd length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import STAGGERED, UNIFORM, SystemParams

#: mode kinds
UNIFORM_MODE = "uniform"
ZERO_MODE = "zero"
STAGGERED_MODE = "staggered"


@dataclass(frozen=True)
class ChainMode:
    """One adjacency eigenmode.

    ``kind`` is "uniform" (label m = 1..N), "zero" (the odd-site zero-energy
    mode of the staggered chain) or "staggered" (label m = 1..(N-1)/2 with
    ``branch`` +1 or -1 selecting the sign of the eigenvalue).  Site
    amplitudes are real and unit-norm; uniform and zero modes carry a
    positive first nonzero amplitude, while the staggered pairs keep the
    signs of their closed form so the odd/even coefficient relations
    between the two partners survive.
    """

    kind: str
    eigenvalue: float
    site_amps: np.ndarray
    m: int | None = None
    branch: int | None = None

    @property
    def label(self) -> str:
        if self.kind == ZERO_MODE:
            return "o"
        if self.kind == STAGGERED_MODE:
            return f"{self.m}{'+' if self.branch > 0 else '-'}"
        return str(self.m)


@dataclass(frozen=True)
class ChainSpectrum:
    """Complete eigen-decomposition of a chain adjacency matrix.

    Modes are ordered deterministically: ascending m for the uniform chain;
    zero mode first, then (m, -), (m, +) with ascending m for the staggered
    chain.
    """

    n_sites: int
    pattern: str
    kappa: float | None
    modes: tuple[ChainMode, ...]

    def __post_init__(self):
        if len(self.modes) != self.n_sites:
            raise ValueError("spectrum must contain exactly one mode per site")

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.array([mode.eigenvalue for mode in self.modes])

    @property
    def site_amp_matrix(self) -> np.ndarray:
        """Row i holds the site amplitudes of mode i, shape (N, N)."""
        return np.array([mode.site_amps for mode in self.modes])


def adjacency(params: SystemParams) -> np.ndarray:
    """Symmetric bond matrix of the chain described by ``params``."""
    kappa = params.kappa if params.is_staggered else None
    return bond_matrix(params.n_cavities, kappa)


def bond_matrix(n_sites: int, kappa: float | None = None) -> np.ndarray:
    """Adjacency matrix with bond (i, i+1) weighted 1 - kappa*(-1)**i.

    ``kappa=None`` (or 0) gives the uniform chain with unit bonds.
    """
    a = np.zeros((n_sites, n_sites))
    for i in range(1, n_sites):  # bond between 1-indexed sites i, i+1
        w = 1.0 if kappa is None else 1.0 - kappa * (-1.0) ** i
        a[i - 1, i] = w
        a[i, i - 1] = w
    return a


def _gauge_fixed(v: np.ndarray) -> np.ndarray:
    """Normalize and flip sign so the first nonzero amplitude is positive."""
    v = v / np.linalg.norm(v)
    nonzero = np.nonzero(np.abs(v) > 1e-14)[0]
    if nonzero.size and v[nonzero[0]] < 0:
        v = -v
    v.flags.writeable = False
    return v


def _normalized(v: np.ndarray) -> np.ndarray:
    """Normalize without touching the sign convention of the closed form."""
    v = v / np.linalg.norm(v)
    v.flags.writeable = False
    return v


def uniform_spectrum(n_sites: int) -> ChainSpectrum:
    """Sine eigenmodes of the uniform open chain.

    Mode m carries eigenvalue -2*cos(m*pi/(N+1)); the matching site profile
    is sin((N+1-m)*M*pi/(N+1)), i.e. the sine profile of the mirror label,
    which is the combination that actually satisfies A v = eps v.  Site-s
    amplitude magnitudes equal |sin(m*s*pi/(N+1))| either way.
    """
    if n_sites < 1:
        raise ValueError(f"n_sites must be >= 1, got {n_sites}")
    n = n_sites
    sites = np.arange(1, n + 1)
    modes = []
    for m in range(1, n + 1):
        eig = -2.0 * math.cos(m * math.pi / (n + 1))
        amps = math.sqrt(2.0 / (n + 1)) * np.sin((n + 1 - m) * sites * np.pi / (n + 1))
        modes.append(ChainMode(kind=UNIFORM_MODE, m=m, eigenvalue=eig,
                               site_amps=_gauge_fixed(amps)))
    return ChainSpectrum(n_sites=n, pattern=UNIFORM, kappa=None, modes=tuple(modes))


def bond_alternation_ratio(kappa: float) -> float:
    """tau = (kappa + 1)/(kappa - 1); negative for every kappa in (-1, 1)."""
    return (kappa + 1.0) / (kappa - 1.0)


def _zero_mode_odd_amps(n_sites: int, kappa: float) -> np.ndarray:
    """Unnormalized zero-mode amplitudes tau**(M-1) on odd sites 2M-1.

    Built in the log domain: tau**(N+1) overflows double precision for
    N around 300 once |kappa| approaches 1, so powers are rescaled by the
    largest magnitude before normalization.
    """
    tau = bond_alternation_ratio(kappa)
    count = (n_sites + 1) // 2
    exponents = np.arange(count) * math.log(abs(tau))
    exponents -= exponents.max()
    return np.where(np.arange(count) % 2 == 0, 1.0, math.copysign(1.0, tau)) * np.exp(exponents)


def staggered_mode_angle(n_sites: int, kappa: float, m: int) -> float:
    """Odd-site phase offset of the paired staggered modes."""
    tau = bond_alternation_ratio(kappa)
    phi = m * math.pi / (n_sites + 1)
    eig = 2.0 * math.sqrt(math.cos(phi) ** 2 + kappa ** 2 * math.sin(phi) ** 2)
    z = (1.0 - kappa) / eig * (np.exp(-2j * phi) - tau)
    return float(np.angle(z))


def staggered_spectrum(n_sites: int, kappa: float) -> ChainSpectrum:
    """Closed-form eigenmodes of the bond-alternating open chain.

    Requires odd N so that strong and weak bonds occur equally often.  The
    spectrum consists of one zero-energy mode supported on the odd sites
    plus (N-1)/2 symmetric pairs at +-2*sqrt(cos^2 + kappa^2 sin^2).
    Vectors are renormalized explicitly after construction; distortion 0
    degenerates to the uniform closed form and is dispatched there.
    """
    if n_sites % 2 == 0:
        raise ValueError("staggered spectrum requires an odd number of sites, "
                         f"got {n_sites}")
    if not -1.0 < kappa < 1.0:
        raise ValueError(f"kappa must lie strictly in (-1, 1), got {kappa}")
    if kappa == 0.0:
        return uniform_spectrum(n_sites)

    n = n_sites
    modes = []

    v = np.zeros(n)
    v[0::2] = _zero_mode_odd_amps(n, kappa)
    modes.append(ChainMode(kind=ZERO_MODE, eigenvalue=0.0, site_amps=_gauge_fixed(v)))

    even_m = np.arange(1, (n - 1) // 2 + 1)   # even sites 2M
    odd_m = np.arange(1, (n + 1) // 2 + 1)    # odd sites 2M-1
    for m in range(1, (n - 1) // 2 + 1):
        phi = m * math.pi / (n + 1)
        eig = 2.0 * math.sqrt(math.cos(phi) ** 2 + kappa ** 2 * math.sin(phi) ** 2)
        theta = staggered_mode_angle(n, kappa, m)
        even_amps = np.sin(2.0 * m * even_m * np.pi / (n + 1))
        odd_amps = np.sin(2.0 * m * odd_m * np.pi / (n + 1) + theta)
        # the +- pair keeps the closed form's own signs: flipping either
        # partner would break the printed odd/even coefficient relations
        for branch in (-1, +1):
            v = np.zeros(n)
            v[1::2] = even_amps
            v[0::2] = branch * odd_amps
            modes.append(ChainMode(kind=STAGGERED_MODE, m=m, branch=branch,
                                   eigenvalue=branch * eig,
                                   site_amps=_normalized(v)))
    return ChainSpectrum(n_sites=n, pattern=STAGGERED, kappa=kappa, modes=tuple(modes))


def chain_spectrum(params: SystemParams) -> ChainSpectrum:
    """Spectrum matching the hopping pattern of ``params``."""
    if params.is_staggered:
        return staggered_spectrum(params.n_cavities, params.kappa)
    return uniform_spectrum(params.n_cavities)
