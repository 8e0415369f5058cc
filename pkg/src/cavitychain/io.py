"""CSV/JSON serialization of traces and sweep results.

Data files are reproducible byte for byte: floats are written with 17
significant digits (lossless for doubles), rows follow a fixed order, and
nothing time- or host-dependent goes into them.  Run metadata (timestamps,
wall time, tool version) lives in a ``<output>.meta.json`` sidecar instead.
Files are written atomically via a temporary file renamed into place.
"""

from __future__ import annotations

import csv
import dataclasses
import io as _io
import json
import os
import tempfile
from datetime import datetime, timezone

import numpy as np

from .dynamics import PopulationTrace
from .model import SystemParams
from .sweep import SweepResult

CHANNELS = ("atom", "photon")

TRACE_HEADER = ("t", "site", "channel", "probability")
SWEEP_HEADER = ("axis_value", "channel", "t_opt", "p_max")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def atomic_write_text(path: str, text: str) -> None:
    """Write text to ``path`` through a same-directory temp file + rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def params_to_dict(params: SystemParams) -> dict:
    return dataclasses.asdict(params)


def params_from_dict(data: dict) -> SystemParams:
    return SystemParams(**data)


# ---------------------------------------------------------------------------
# population traces
# ---------------------------------------------------------------------------

def trace_to_csv(trace: PopulationTrace) -> str:
    """Rows ordered by time, then site, then channel (atom before photon)."""
    buffer = _io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TRACE_HEADER)
    for i, t in enumerate(trace.times):
        t_str = _fmt(t)
        for s in range(trace.n_sites):
            writer.writerow([t_str, s + 1, "atom", _fmt(trace.p_atom[i, s])])
            writer.writerow([t_str, s + 1, "photon", _fmt(trace.p_photon[i, s])])
    return buffer.getvalue()


def write_trace_csv(trace: PopulationTrace, path: str) -> None:
    atomic_write_text(path, trace_to_csv(trace))


def read_trace_csv(path: str, params: SystemParams | None = None) -> PopulationTrace:
    """Rebuild a trace from its CSV form (parameters are not stored in CSV)."""
    times: list[float] = []
    cells: dict[tuple[int, int, str], float] = {}
    n_sites = 0
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if tuple(header) != TRACE_HEADER:
            raise ValueError(f"unexpected trace header {header!r}")
        for row in reader:
            t, site, channel, prob = float(row[0]), int(row[1]), row[2], float(row[3])
            if not times or t != times[-1]:
                times.append(t)
            n_sites = max(n_sites, site)
            cells[(len(times) - 1, site - 1, channel)] = prob
    p_atom = np.empty((len(times), n_sites))
    p_photon = np.empty((len(times), n_sites))
    for (i, s, channel), prob in cells.items():
        (p_atom if channel == "atom" else p_photon)[i, s] = prob
    return PopulationTrace(times=np.array(times), p_atom=p_atom,
                           p_photon=p_photon, params=params)


def trace_to_json(trace: PopulationTrace) -> str:
    payload = {
        "params": params_to_dict(trace.params) if trace.params else None,
        "times": trace.times.tolist(),
        "sites": list(range(1, trace.n_sites + 1)),
        "p_atom": trace.p_atom.tolist(),
        "p_photon": trace.p_photon.tolist(),
    }
    return json.dumps(payload, indent=1) + "\n"


def write_trace_json(trace: PopulationTrace, path: str) -> None:
    atomic_write_text(path, trace_to_json(trace))


def read_trace_json(path: str) -> PopulationTrace:
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    params = params_from_dict(payload["params"]) if payload.get("params") else None
    return PopulationTrace(times=np.array(payload["times"], dtype=float),
                           p_atom=np.array(payload["p_atom"], dtype=float),
                           p_photon=np.array(payload["p_photon"], dtype=float),
                           params=params)


# ---------------------------------------------------------------------------
# sweep results
# ---------------------------------------------------------------------------

def sweep_to_csv(result: SweepResult) -> str:
    buffer = _io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for point in result.points:
        value = _fmt(point.value)
        writer.writerow([value, "atom", _fmt(point.t_opt_atom), _fmt(point.p_max_atom)])
        writer.writerow([value, "photon", _fmt(point.t_opt_photon), _fmt(point.p_max_photon)])
    return buffer.getvalue()


def write_sweep_csv(result: SweepResult, path: str) -> None:
    atomic_write_text(path, sweep_to_csv(result))


def read_sweep_csv(path: str) -> list[dict]:
    """Sweep rows as dicts with keys axis_value, channel, t_opt, p_max."""
    rows = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if tuple(header) != SWEEP_HEADER:
            raise ValueError(f"unexpected sweep header {header!r}")
        for row in reader:
            rows.append({"axis_value": float(row[0]), "channel": row[1],
                         "t_opt": float(row[2]), "p_max": float(row[3])})
    return rows


def sweep_spec_to_dict(result: SweepResult) -> dict:
    spec = result.spec
    return {
        "axis": spec.axis,
        "values": list(spec.values),
        "fixed": params_to_dict(spec.fixed),
        "time_window": list(spec.time_window) if spec.time_window else None,
        "grid_points": spec.grid_points,
        "refine_tolerance": spec.refine_tolerance,
        "encoding_k": spec.encoding_k,
    }


def sweep_to_json(result: SweepResult) -> str:
    payload = {
        "spec": sweep_spec_to_dict(result),
        "points": [
            {"axis_value": p.value,
             "t_opt_atom": p.t_opt_atom, "p_max_atom": p.p_max_atom,
             "t_opt_photon": p.t_opt_photon, "p_max_photon": p.p_max_photon}
            for p in result.points
        ],
    }
    return json.dumps(payload, indent=1) + "\n"


def write_sweep_json(result: SweepResult, path: str) -> None:
    atomic_write_text(path, sweep_to_json(result))


# ---------------------------------------------------------------------------
# metadata sidecar
# ---------------------------------------------------------------------------

def write_metadata_sidecar(data_path: str, payload: dict) -> str:
    """Write run metadata (with timestamp) next to a data file."""
    from . import __version__

    meta = {
        "tool": "cavitychain",
        "version": __version__,
        "created_utc": datetime.now(timezone.utc).isoformat(),
    }
    meta.update(payload)
    sidecar = data_path + ".meta.json"
    atomic_write_text(sidecar, json.dumps(meta, indent=1) + "\n")
    return sidecar
