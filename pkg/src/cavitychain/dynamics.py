"""Closed-form time evolution in the restricted subspace.

Projecting the chain Hamiltonian onto one adjacency eigenmode leaves a 2x2
atom/photon block; its dressed eigen-pair (E+, E-, mixing angle alpha)
yields explicit probability amplitudes for any injection.  Site-resolved
populations are assembled as mode sums

    amp_channel(s, t) = sum_v c_v c'_v(s) [ ... e^{-i E+ t} + ... e^{-i E- t} ]

where c_v is the overlap of mode v with the injection site and c'_v(s) its
amplitude at the observed site.  The same machinery backs the uniform and
the staggered hopping patterns; only the mode coefficients differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import lattice
from .model import SystemParams

SQRT2 = math.sqrt(2.0)

_TRACE_TOL = 1e-8
_CHUNK = 8192


# ---------------------------------------------------------------------------
# per-mode 2x2 blocks
# ---------------------------------------------------------------------------

def block_matrix(eigenvalue: float, params: SystemParams) -> np.ndarray:
    """2x2 block of the restricted Hamiltonian for one chain mode.

    Basis order: (|mode> (x) |e,0>, |mode> (x) |g,2>).
    """
    return np.array([
        [params.detuning / 2.0, SQRT2 * params.coupling],
        [SQRT2 * params.coupling,
         -params.detuning / 2.0 + 2.0 * params.hopping * eigenvalue],
    ])


def _block_energies(eps, coupling, hopping, detuning):
    eps = np.asarray(eps, dtype=float)
    center = hopping * eps
    radius = np.sqrt((detuning / 2.0 - hopping * eps) ** 2 + 2.0 * coupling ** 2)
    return center + radius, center - radius


def _mixing_angles(e_plus, coupling, detuning):
    # |+> = (cos a, -sin a), |-> = (sin a, cos a) in (atom, photon) coords;
    # a = -atan2(E+ - Delta/2, sqrt(2) lambda) stays well defined at
    # coupling = 0 where the printed arctan form degenerates.
    return -np.arctan2(np.asarray(e_plus) - detuning / 2.0, SQRT2 * coupling)


@dataclass(frozen=True)
class BlockEigenSystem:
    """Dressed eigen-data of every per-mode block, in spectrum mode order."""

    chain_eigenvalues: np.ndarray
    energy_plus: np.ndarray
    energy_minus: np.ndarray
    mixing_angles: np.ndarray

    def __post_init__(self):
        for arr in (self.chain_eigenvalues, self.energy_plus,
                    self.energy_minus, self.mixing_angles):
            arr.flags.writeable = False
        if np.any(self.energy_plus < self.energy_minus):
            raise ValueError("energy_plus must dominate energy_minus")

    @property
    def n_modes(self) -> int:
        return self.chain_eigenvalues.shape[0]


def block_eigensystem(spectrum: lattice.ChainSpectrum,
                      params: SystemParams) -> BlockEigenSystem:
    """Diagonalize the 2x2 block of every chain mode.

    The mixing angle is extracted from the actual eigenvectors instead of a
    printed arctangent ratio, which avoids branch ambiguity near the
    degenerate points (zero coupling, resonant modes).
    """
    eps = spectrum.eigenvalues
    e_plus, e_minus = _block_energies(eps, params.coupling, params.hopping,
                                      params.detuning)
    alpha = _mixing_angles(e_plus, params.coupling, params.detuning)
    return BlockEigenSystem(chain_eigenvalues=eps, energy_plus=e_plus,
                            energy_minus=e_minus, mixing_angles=alpha)


def block_dressed_vectors(alpha):
    """Orthonormal dressed vectors (v_plus, v_minus) for mixing angle(s)."""
    c, s = np.cos(alpha), np.sin(alpha)
    return np.stack([c, -s], axis=-1), np.stack([s, c], axis=-1)


# ---------------------------------------------------------------------------
# mode coefficients
# ---------------------------------------------------------------------------

def _uniform_coefficient_matrix(n_sites: int) -> np.ndarray:
    m = np.arange(1, n_sites + 1)
    s = np.arange(1, n_sites + 1)
    return (math.sqrt(2.0 / (n_sites + 1))
            * np.sin(np.outer(m, s) * np.pi / (n_sites + 1)))


def _staggered_zero_row(n_sites: int, kappa: float) -> np.ndarray:
    """Closed-form zero-mode coefficients, stable for long chains.

    Magnitudes are assembled in the log domain because tau**(N+1) in the
    printed normalization overflows double precision for N around 300 once
    |kappa| approaches 1.
    """
    tau = lattice.bond_alternation_ratio(kappa)
    log_tau = math.log(abs(tau))
    big = (n_sites + 1) * log_tau
    if big > 0:
        log_pow_m1 = big + math.log1p(-math.exp(-big))
    else:
        log_pow_m1 = math.log1p(-math.exp(big))
    log_norm = (math.log(2.0) - math.log(1.0 - kappa)
                + 0.5 * (math.log(abs(kappa)) - log_pow_m1))
    row = np.zeros(n_sites)
    half = np.arange((n_sites + 1) // 2)      # (s-1)/2 over odd sites
    row[0::2] = (-1.0) ** half * np.exp(log_norm + half * log_tau)
    return row


def _staggered_coefficient_matrix(spectrum: lattice.ChainSpectrum) -> np.ndarray:
    """Site coefficients c'_v(s) of every staggered mode, all sites.

    Evaluates the closed forms directly: tau powers on odd sites for the
    zero mode (positive at the first site, matching the spectrum's gauge);
    for the paired modes, branch-signed phase-shifted sines on odd sites
    and plain sines on even sites.  Rows are renormalized exactly like the
    spectrum's eigenvectors.
    """
    n = spectrum.n_sites
    kappa = spectrum.kappa
    sites = np.arange(1, n + 1)
    odd = sites % 2 == 1
    rows = np.zeros((n, n))
    scale = math.sqrt(2.0 / (n + 1))
    for i, mode in enumerate(spectrum.modes):
        if mode.kind == lattice.ZERO_MODE:
            row = _staggered_zero_row(n, kappa)
            rows[i] = row / np.linalg.norm(row)
            continue
        theta = lattice.staggered_mode_angle(n, kappa, mode.m)
        row = np.where(
            odd,
            mode.branch * np.sin((sites + 1) * mode.m * np.pi / (n + 1) + theta),
            np.sin(sites * mode.m * np.pi / (n + 1)),
        ) * scale
        rows[i] = row / np.linalg.norm(row)
    return rows


def _coefficient_matrix(spectrum: lattice.ChainSpectrum) -> np.ndarray:
    if spectrum.pattern == lattice.STAGGERED:
        return _staggered_coefficient_matrix(spectrum)
    return _uniform_coefficient_matrix(spectrum.n_sites)


def site_coefficients_staggered(spectrum: lattice.ChainSpectrum,
                                site: int) -> np.ndarray:
    """Coefficients c'_v(site) of all staggered modes, 1-indexed site.

    The zero mode only touches odd sites; on even sites the paired modes
    collapse to a common sine coefficient.  The injection coefficients of
    a state in the first cavity are the site-1 values.
    """
    if spectrum.pattern != lattice.STAGGERED:
        raise ValueError("spectrum does not carry staggered modes")
    if not 1 <= site <= spectrum.n_sites:
        raise ValueError(f"site must lie in 1..{spectrum.n_sites}, got {site}")
    return _staggered_coefficient_matrix(spectrum)[:, site - 1]


# ---------------------------------------------------------------------------
# amplitudes and populations
# ---------------------------------------------------------------------------

def amplitudes_uniform(params: SystemParams, site: int, mode: int,
                       t: float) -> tuple[complex, complex]:
    """Dressed-branch amplitudes (f+, f-) at one site, one mode, one time.

    f+-(t) = (2/(N+1)) e^{-i E+- t} chi^{+-}(beta - alpha)
             sin(m pi/(N+1)) sin(m M pi/(N+1))

    with chi^+ = sin and chi^- = cos.  Populations assembled from these
    match the evolved state; individual amplitudes are defined up to a
    site-wise sign shared by every mode.
    """
    if params.is_staggered:
        raise ValueError("amplitudes_uniform requires the uniform pattern")
    n = params.n_cavities
    if not (1 <= site <= n and 1 <= mode <= n):
        raise ValueError(f"site and mode must lie in 1..{n}")
    eps = -2.0 * math.cos(mode * math.pi / (n + 1))
    e_plus, e_minus = _block_energies(eps, params.coupling, params.hopping,
                                      params.detuning)
    alpha = float(_mixing_angles(e_plus, params.coupling, params.detuning))
    geom = (2.0 / (n + 1) * math.sin(mode * math.pi / (n + 1))
            * math.sin(mode * site * math.pi / (n + 1)))
    f_plus = geom * math.sin(params.beta - alpha) * np.exp(-1j * e_plus * t)
    f_minus = geom * math.cos(params.beta - alpha) * np.exp(-1j * e_minus * t)
    return complex(f_plus), complex(f_minus)


@dataclass(frozen=True)
class PopulationTrace:
    """Site- and channel-resolved occupation probabilities on a time grid.

    ``p_atom[i, s-1]`` (``p_photon``) is the probability of finding the
    excitation as an atomic (photon-pair) excitation at site s at
    ``times[i]``.  Probabilities over sites and channels sum to one at
    every time.
    """

    times: np.ndarray
    p_atom: np.ndarray
    p_photon: np.ndarray
    params: SystemParams

    def __post_init__(self):
        for arr in (self.times, self.p_atom, self.p_photon):
            arr.flags.writeable = False
        if self.p_atom.shape != self.p_photon.shape:
            raise ValueError("channel arrays must share a shape")
        if self.p_atom.shape[0] != self.times.shape[0]:
            raise ValueError("time axis mismatch")
        total = self.p_atom.sum(axis=1) + self.p_photon.sum(axis=1)
        worst = float(np.max(np.abs(total - 1.0))) if total.size else 0.0
        if worst > _TRACE_TOL:
            raise ValueError(f"populations do not sum to 1 (deviation {worst:.3e})")

    @property
    def n_sites(self) -> int:
        return self.p_atom.shape[1]


def _as_time_grid(times) -> np.ndarray:
    grid = np.asarray(times, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("time grid must be a non-empty 1-d array")
    return grid


def _branch_weights(blocks: BlockEigenSystem, beta: float):
    """Per-mode dressed-branch weights for the two observation channels."""
    sin_a, cos_a = np.sin(blocks.mixing_angles), np.cos(blocks.mixing_angles)
    sin_b = np.sin(beta - blocks.mixing_angles)
    cos_b = np.cos(beta - blocks.mixing_angles)
    atom = (sin_b * cos_a, cos_b * sin_a)
    photon = (-sin_b * sin_a, cos_b * cos_a)
    return atom, photon


def population_trace(params: SystemParams, times,
                     injection_site: int = 1) -> PopulationTrace:
    """Populations of every site and channel for a localized injection.

    The injected state is cos(beta)|g,2> + sin(beta)|e,0> at
    ``injection_site`` (the first cavity by default).
    """
    grid = _as_time_grid(times)
    spectrum = lattice.chain_spectrum(params)
    blocks = block_eigensystem(spectrum, params)
    coeff = _coefficient_matrix(spectrum)
    if not 1 <= injection_site <= params.n_cavities:
        raise ValueError(f"injection_site must lie in 1..{params.n_cavities}")
    c = coeff[:, injection_site - 1]
    (atom_p, atom_m), (photon_p, photon_m) = _branch_weights(blocks, params.beta)
    phase_p = np.exp(-1j * np.outer(blocks.energy_plus, grid))
    phase_m = np.exp(-1j * np.outer(blocks.energy_minus, grid))
    amp_atom = coeff.T @ ((c * atom_p)[:, None] * phase_p
                          + (c * atom_m)[:, None] * phase_m)
    amp_photon = coeff.T @ ((c * photon_p)[:, None] * phase_p
                            + (c * photon_m)[:, None] * phase_m)
    return PopulationTrace(times=grid,
                           p_atom=np.abs(amp_atom.T) ** 2,
                           p_photon=np.abs(amp_photon.T) ** 2,
                           params=params)


def populations_uniform(params: SystemParams, times,
                        injection_site: int = 1) -> PopulationTrace:
    """Population trace for the uniform chain."""
    if params.is_staggered:
        raise ValueError("populations_uniform requires the uniform pattern")
    return population_trace(params, times, injection_site)


def populations_staggered(params: SystemParams, times,
                          injection_site: int = 1) -> PopulationTrace:
    """Population trace for the staggered chain (odd N).

    Distortion 0 is delegated to the uniform closed form, to which the
    staggered expressions converge continuously.
    """
    if not params.is_staggered:
        raise ValueError("populations_staggered requires the staggered pattern")
    return population_trace(params, times, injection_site)


# ---------------------------------------------------------------------------
# scalar mode sums for extremum searches
# ---------------------------------------------------------------------------

class ModeAmplitudeSeries:
    """One complex amplitude written as a two-branch mode sum.

    amp(t) = sum_v [ w+_v e^{-i E+_v t} + w-_v e^{-i E-_v t} ]

    Evaluation is chunked over the time axis so that dense scans at strong
    coupling (fast dressed beats, many samples) stay within memory.
    """

    __slots__ = ("weights_plus", "weights_minus", "e_plus", "e_minus")

    def __init__(self, weights_plus, weights_minus, e_plus, e_minus):
        self.weights_plus = np.asarray(weights_plus, dtype=complex)
        self.weights_minus = np.asarray(weights_minus, dtype=complex)
        self.e_plus = np.asarray(e_plus, dtype=float)
        self.e_minus = np.asarray(e_minus, dtype=float)

    @property
    def bandwidth(self) -> float:
        """Largest beat frequency that can appear in |amp(t)|^2."""
        energies = np.concatenate([self.e_plus, self.e_minus])
        return float(energies.max() - energies.min())

    def amplitude(self, times) -> np.ndarray:
        grid = np.atleast_1d(np.asarray(times, dtype=float))
        out = np.empty(grid.shape, dtype=complex)
        for start in range(0, grid.size, _CHUNK):
            block = grid[start:start + _CHUNK]
            out[start:start + _CHUNK] = (
                self.weights_plus @ np.exp(-1j * np.outer(self.e_plus, block))
                + self.weights_minus @ np.exp(-1j * np.outer(self.e_minus, block))
            )
        return out

    def probability(self, times) -> np.ndarray:
        return np.abs(self.amplitude(times)) ** 2


def site_probability_series(params: SystemParams, channel: str,
                            site: int | None = None,
                            injection_site: int = 1) -> ModeAmplitudeSeries:
    """Amplitude series of one channel at one site (the last by default)."""
    if channel not in ("atom", "photon"):
        raise ValueError(f"channel must be 'atom' or 'photon', got {channel!r}")
    n = params.n_cavities
    site = n if site is None else site
    if not (1 <= site <= n and 1 <= injection_site <= n):
        raise ValueError(f"sites must lie in 1..{n}")
    spectrum = lattice.chain_spectrum(params)
    blocks = block_eigensystem(spectrum, params)
    coeff = _coefficient_matrix(spectrum)
    base = coeff[:, injection_site - 1] * coeff[:, site - 1]
    atom, photon = _branch_weights(blocks, params.beta)
    w_plus, w_minus = atom if channel == "atom" else photon
    return ModeAmplitudeSeries(base * w_plus, base * w_minus,
                               blocks.energy_plus, blocks.energy_minus)
