"""Deterministic maximization of mode-sum probabilities over a time window.

A coarse uniform scan locates the neighbourhood of the maximum and a
golden-section pass sharpens the bracket.  The coarse grid densifies
automatically with the spectral bandwidth of the series: probabilities
beat at frequencies up to max(E) - min(E), and a grid blind to those
oscillations reports systematically low maxima.
"""

from __future__ import annotations

import math

import numpy as np

from .dynamics import ModeAmplitudeSeries

#: minimum number of coarse scan points (also the fixed default grid)
GRID_FLOOR = 2001
#: coarse samples per period of the fastest beat present in the signal;
#: sparser grids select the wrong beat peak near narrow arrival envelopes
SAMPLES_PER_PERIOD = 12

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def auto_grid_points(series: ModeAmplitudeSeries, window: tuple[float, float]) -> int:
    span = window[1] - window[0]
    beats = span * series.bandwidth / (2.0 * math.pi)
    return max(GRID_FLOOR, int(math.ceil(SAMPLES_PER_PERIOD * beats)) + 1)


def maximize_probability(series: ModeAmplitudeSeries,
                         window: tuple[float, float],
                         grid_points: int | None = None,
                         refine_tolerance: float = 1e-4) -> tuple[float, float]:
    """(t_max, p_max) of |amp(t)|^2 over a closed window.

    Ties on the coarse grid break toward the earliest time; the refinement
    never leaves the bracket around the winning grid point, so the result
    is deterministic and at least as large as the coarse maximum.
    """
    lo, hi = float(window[0]), float(window[1])
    if not (hi > lo >= 0.0) or not math.isfinite(hi):
        raise ValueError(f"time window must satisfy 0 <= lo < hi, got {window}")
    if grid_points is None:
        grid_points = auto_grid_points(series, window)
    if grid_points < 2:
        raise ValueError(f"grid_points must be >= 2, got {grid_points}")
    if refine_tolerance <= 0:
        raise ValueError("refine_tolerance must be positive")

    grid = np.linspace(lo, hi, grid_points)
    values = series.probability(grid)
    best = int(np.argmax(values))        # argmax returns the earliest tie
    step = (hi - lo) / (grid_points - 1)
    a = max(lo, grid[best] - step)
    b = min(hi, grid[best] + step)
    t_best, p_best = _golden_section(series, a, b, refine_tolerance)
    if values[best] >= p_best:           # refinement must not lose ground
        return float(grid[best]), float(values[best])
    return t_best, p_best


def _golden_section(series: ModeAmplitudeSeries, a: float, b: float,
                    tol: float) -> tuple[float, float]:
    def f(t):
        return float(series.probability(np.array([t]))[0])

    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    mid = 0.5 * (a + b)
    return mid, f(mid)
