"""Cross-checks of every closed form against the brute-force reference.

Each check reports the worst absolute error it observed; the suite passes
when every check stays under its tolerance.  All randomness is drawn from
a fixed seed, so repeated runs are identical.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from . import encoding as encoding_mod
from . import lattice, oracle
from .dynamics import population_trace
from .model import STAGGERED, SystemParams, initial_state

DEFAULT_TOLERANCE = 1e-9
_SEED = 20110915


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error < self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[VerificationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _spectrum_errors(spectrum, matrix) -> float:
    vs = spectrum.site_amp_matrix
    eps = spectrum.eigenvalues
    residual = np.max(np.abs(matrix @ vs.T - vs.T * eps))
    gram = np.max(np.abs(vs @ vs.T - np.eye(spectrum.n_sites)))
    complete = np.max(np.abs(vs.T @ vs - np.eye(spectrum.n_sites)))
    return float(max(residual, gram, complete))


def _random_params(rng, n, staggered: bool) -> SystemParams:
    kwargs = dict(
        n_cavities=n,
        coupling=float(rng.uniform(0.0, 20.0)),
        hopping=float(rng.uniform(0.0, 5.0)),
        detuning=float(rng.uniform(-10.0, 10.0)),
        beta=float(rng.uniform(0.0, math.pi / 2)),
    )
    if staggered:
        kwargs["pattern"] = STAGGERED
        kwargs["kappa"] = float(rng.uniform(-0.95, 0.95))
    return SystemParams(**kwargs)


def _dynamics_error(rng, n_values, draws, staggered, lambda_bias) -> float:
    worst = 0.0
    for i in range(draws):
        n = int(n_values[i % len(n_values)])
        params = _random_params(rng, n, staggered)
        times = rng.uniform(0.0, 30.0, size=5)
        analytic_params = params
        if lambda_bias:
            analytic_params = dataclasses.replace(
                params, coupling=params.coupling * (1.0 + lambda_bias))
        trace = population_trace(analytic_params, times)
        ham = oracle.build_hamiltonian(params)
        p_atom, p_photon = oracle.evolved_populations(ham, initial_state(params), times)
        worst = max(worst,
                    float(np.max(np.abs(trace.p_atom - p_atom))),
                    float(np.max(np.abs(trace.p_photon - p_photon))))
    return worst


def _encoding_error(rng, n_max, draws) -> float:
    widths = [k for k in (1, 2, 3) if max(4 * k - 2, 2) <= n_max]
    worst = 0.0
    for i in range(draws):
        k = widths[i % len(widths)]
        n_min = 4 * k - 2 if k > 1 else 2
        n = int(rng.integers(max(n_min, 2), n_max + 1))
        params = _random_params(rng, n, staggered=False)
        enc = encoding_mod.scheme(params, k=k)
        times = rng.uniform(0.0, 30.0, size=4)
        p_atom, p_photon = encoding_mod.transfer_probabilities(enc, times)
        ham = oracle.build_hamiltonian(params)
        target_atom, target_photon = encoding_mod.decoding_targets(enc)
        psi0 = encoding_mod.encoded_initial_state(enc)
        for j, t in enumerate(times):
            evolved = oracle.evolve(ham, psi0, float(t)).as_vector()
            ref_atom = abs(np.vdot(target_atom.as_vector(), evolved)) ** 2
            ref_photon = abs(np.vdot(target_photon.as_vector(), evolved)) ** 2
            worst = max(worst, abs(p_atom[j] - ref_atom), abs(p_photon[j] - ref_photon))
    return worst


def _kappa_zero_error(n: int) -> float:
    uniform = SystemParams(n_cavities=n, coupling=3.0, hopping=1.0,
                           detuning=0.5, beta=math.pi / 4)
    staggered = dataclasses.replace(uniform, pattern=STAGGERED, kappa=0.0)
    times = np.linspace(0.0, 2.0 * n, 101)
    a = population_trace(uniform, times)
    b = population_trace(staggered, times)
    return float(max(np.max(np.abs(a.p_atom - b.p_atom)),
                     np.max(np.abs(a.p_photon - b.p_photon))))


def run_verification(n_max: int = 12, draws: int = 50,
                     tolerance: float = DEFAULT_TOLERANCE,
                     lambda_bias: float = 0.0,
                     seed: int = _SEED) -> VerificationReport:
    """Analytic-versus-oracle suite over random parameter draws.

    ``lambda_bias`` fractionally corrupts the coupling fed to the analytic
    path only; it exists as a negative control for the report itself.
    """
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    rng = np.random.default_rng(seed)
    uniform_n = list(range(2, n_max + 1))
    staggered_n = [n for n in range(3, n_max + 1) if n % 2 == 1]

    checks = []

    worst = 0.0
    for n in uniform_n:
        worst = max(worst, _spectrum_errors(lattice.uniform_spectrum(n),
                                            lattice.bond_matrix(n)))
    checks.append(VerificationCheck("lattice-uniform", worst, tolerance))

    worst = 0.0
    for n in staggered_n:
        for kappa in (-0.8, -0.2, 0.35, 0.9):
            worst = max(worst, _spectrum_errors(
                lattice.staggered_spectrum(n, kappa), lattice.bond_matrix(n, kappa)))
    checks.append(VerificationCheck("lattice-staggered", worst, tolerance))

    checks.append(VerificationCheck(
        "dynamics-uniform-vs-oracle",
        _dynamics_error(rng, uniform_n, draws, False, lambda_bias), tolerance))
    checks.append(VerificationCheck(
        "dynamics-staggered-vs-oracle",
        _dynamics_error(rng, staggered_n, draws, True, lambda_bias), tolerance))
    checks.append(VerificationCheck(
        "encoding-vs-oracle", _encoding_error(rng, n_max, min(draws, 30)), tolerance))
    n_kappa = min(n_max, 11)
    if n_kappa % 2 == 0:
        n_kappa -= 1
    checks.append(VerificationCheck(
        "kappa-zero-matches-uniform", _kappa_zero_error(n_kappa), 1e-10))

    return VerificationReport(checks=tuple(checks))
