"""Parameter scans and optimal-time searches over chains and encodings.

Each scan point maximizes a transmission probability over a time window:
the end-site excitation probability of a localized injection, or the
decoder overlap of a multi-site encoding when an encoding width is in
play.  Points are independent work items; results are always assembled in
axis order, so output is deterministic regardless of worker count.
"""

from __future__ import annotations

import dataclasses
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import encoding as encoding_mod
from ._search import maximize_probability
from .dynamics import site_probability_series
from .model import STAGGERED, SystemParams

SIZE = "size"
BETA = "beta"
KAPPA = "kappa"
ENCODING_K = "encoding_k"
HOPPING = "hopping"

AXES = (SIZE, BETA, KAPPA, ENCODING_K, HOPPING)

CHANNELS = ("atom", "photon")


def optimal_time(params: SystemParams, channel: str,
                 time_window: tuple[float, float] | None = None,
                 grid_points: int | None = None,
                 refine_tolerance: float | None = None) -> tuple[float, float]:
    """(t_o, P_max) of the end-site probability in one channel.

    A coarse scan of the window (densified to resolve the dressed beats)
    seeds a golden-section refinement; ties break toward the earliest
    maximizer.  Defaults: window (0, 2N/xi], refinement bracket 1e-4/xi.
    """
    if time_window is None:
        if params.hopping <= 0:
            raise ValueError("a time window is required when hopping is zero")
        time_window = (0.0, 2.0 * params.n_cavities / params.hopping)
    if refine_tolerance is None:
        refine_tolerance = 1e-4 / params.hopping if params.hopping > 0 else 1e-4
    series = site_probability_series(params, channel)
    return maximize_probability(series, time_window, grid_points, refine_tolerance)


@dataclass(frozen=True)
class SweepSpec:
    """One axis of values swept against a fixed parameter template.

    ``encoding_k`` switches the objective from the end-site populations to
    the k-qubit decoder overlap (with r = k); the "encoding_k" axis sweeps
    that width directly.  ``time_window=None`` resolves per point to
    (0, 2N/xi].
    """

    axis: str
    values: tuple
    fixed: SystemParams
    time_window: tuple[float, float] | None = None
    grid_points: int | None = None
    refine_tolerance: float | None = None
    encoding_k: int | None = None

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}, got {self.axis!r}")
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("values must be non-empty")
        if self.time_window is not None and not self.time_window[1] > self.time_window[0] >= 0:
            raise ValueError(f"invalid time window {self.time_window}")
        if self.grid_points is not None and self.grid_points < 2:
            raise ValueError("grid_points must be >= 2")


@dataclass(frozen=True)
class SweepPoint:
    """Per-channel optimum at one axis value (wall time is metadata only)."""

    value: float
    t_opt_atom: float
    p_max_atom: float
    t_opt_photon: float
    p_max_photon: float
    wall_time: float


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    points: tuple[SweepPoint, ...]

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(p, name) for p in self.points])


def _apply_axis(spec: SweepSpec, value):
    params = spec.fixed
    if spec.axis == SIZE:
        params = dataclasses.replace(params, n_cavities=int(value))
    elif spec.axis == BETA:
        params = dataclasses.replace(params, beta=float(value))
    elif spec.axis == KAPPA:
        params = dataclasses.replace(params, pattern=STAGGERED, kappa=float(value))
    elif spec.axis == HOPPING:
        params = dataclasses.replace(params, hopping=float(value))
    return params


def _scan_point(spec: SweepSpec, value) -> SweepPoint:
    start = time.perf_counter()
    try:
        params = _apply_axis(spec, value)
        window = spec.time_window
        if window is None:
            if params.hopping <= 0:
                raise ValueError("a time window is required when hopping is zero")
            window = (0.0, 2.0 * params.n_cavities / params.hopping)
        tol = spec.refine_tolerance
        if tol is None:
            tol = 1e-4 / params.hopping if params.hopping > 0 else 1e-4
        k = int(value) if spec.axis == ENCODING_K else spec.encoding_k
        if k is not None:
            enc = encoding_mod.scheme(params, k=k)
            opt = encoding_mod.max_transfer_over_time(
                enc, t_window=window, grid_points=spec.grid_points,
                refine_tolerance=tol)
            t_a, p_a, t_p, p_p = opt
        else:
            t_a, p_a = maximize_probability(
                site_probability_series(params, "atom"), window,
                spec.grid_points, tol)
            t_p, p_p = maximize_probability(
                site_probability_series(params, "photon"), window,
                spec.grid_points, tol)
    except ValueError as exc:
        raise ValueError(f"sweep value {value!r}: {exc}") from exc
    return SweepPoint(value=float(value), t_opt_atom=t_a, p_max_atom=p_a,
                      t_opt_photon=t_p, p_max_photon=p_p,
                      wall_time=time.perf_counter() - start)


def scan(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Run every axis point and assemble the results in axis order."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or len(spec.values) == 1:
        points = [_scan_point(spec, value) for value in spec.values]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(lambda v: _scan_point(spec, v), spec.values))
    return SweepResult(spec=spec, points=tuple(points))


def linear_fit_t_vs_n(result: SweepResult, channel: str = "atom") -> tuple[float, float, float]:
    """Least-squares line through (N, t_opt); returns (slope, intercept, residual).

    The residual is the RMS misfit normalized by the RMS of the data, so an
    exact line reports 0 regardless of scale.
    """
    if result.spec.axis != SIZE:
        raise ValueError("linear fit requires a size-axis sweep")
    if len(result.points) < 3:
        raise ValueError("linear fit requires at least 3 points")
    if channel not in CHANNELS:
        raise ValueError(f"channel must be one of {CHANNELS}")
    n = result.column("value")
    t = result.column(f"t_opt_{channel}")
    design = np.column_stack([n, np.ones_like(n)])
    (slope, intercept), *_ = np.linalg.lstsq(design, t, rcond=None)
    misfit = t - design @ (slope, intercept)
    residual = float(np.sqrt(np.mean(misfit ** 2)) / np.sqrt(np.mean(t ** 2)))
    return float(slope), float(intercept), residual
