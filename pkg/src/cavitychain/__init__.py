"""Quantum state transfer through a 1D coupled-cavity array with two-photon exchange.

The package provides closed-form spectra and dynamics for a chain of
cavities whose atoms exchange photon pairs with the field (uniform or
bond-alternating hopping), multi-site encoding/decoding of the transferred
state, a brute-force reference evolver, and deterministic parameter sweeps.
"""

from .dynamics import (BlockEigenSystem, ModeAmplitudeSeries, PopulationTrace,
                       amplitudes_uniform, block_dressed_vectors,
                       block_eigensystem, block_matrix, population_trace,
                       populations_staggered, populations_uniform,
                       site_coefficients_staggered, site_probability_series)
from .encoding import (EncodingScheme, TransferOptimum, decoding_targets,
                       encoded_initial_state, max_transfer_over_time, scheme,
                       transfer_probabilities, transfer_probability)
from .lattice import (ChainMode, ChainSpectrum, adjacency, bond_matrix,
                      chain_spectrum, staggered_spectrum, uniform_spectrum)
from .model import (STAGGERED, UNIFORM, DressedPair, RestrictedState,
                    SingleCavityParams, SystemParams, dressed_vectors,
                    effective_coupling, initial_state, jc_spectrum,
                    localized_state, single_cavity_block)
from .oracle import (DenseRestrictedHamiltonian, build_hamiltonian, evolve,
                     evolved_populations)
from .sweep import (SweepPoint, SweepResult, SweepSpec, linear_fit_t_vs_n,
                    optimal_time, scan)
from .verify import VerificationCheck, VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "BlockEigenSystem", "ChainMode", "ChainSpectrum",
    "DenseRestrictedHamiltonian", "DressedPair", "EncodingScheme",
    "ModeAmplitudeSeries", "PopulationTrace", "RestrictedState",
    "SingleCavityParams", "SweepPoint", "SweepResult", "SweepSpec",
    "SystemParams", "TransferOptimum", "UNIFORM", "STAGGERED",
    "VerificationCheck", "VerificationReport",
    "adjacency", "amplitudes_uniform", "block_dressed_vectors",
    "block_eigensystem", "block_matrix", "bond_matrix", "build_hamiltonian",
    "chain_spectrum", "decoding_targets", "dressed_vectors",
    "effective_coupling", "encoded_initial_state", "evolve",
    "evolved_populations", "initial_state", "jc_spectrum",
    "linear_fit_t_vs_n", "localized_state", "max_transfer_over_time",
    "optimal_time", "population_trace", "populations_staggered",
    "populations_uniform", "run_verification", "scan", "scheme",
    "single_cavity_block", "site_coefficients_staggered",
    "site_probability_series", "staggered_spectrum", "transfer_probabilities",
    "transfer_probability", "uniform_spectrum",
]
