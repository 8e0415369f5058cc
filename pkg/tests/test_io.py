import json
import math
import os

import numpy as np
import pytest

from cavitychain import dynamics, io, model, sweep


@pytest.fixture
def trace():
    params = model.SystemParams(n_cavities=4, coupling=3.0, hopping=1.0,
                                detuning=0.5, beta=math.pi / 4)
    times = np.linspace(0, 7, 19)
    return dynamics.population_trace(params, times)


@pytest.fixture
def sweep_result():
    params = model.SystemParams(n_cavities=10, coupling=10.0, hopping=1.0)
    spec = sweep.SweepSpec(axis=sweep.SIZE, values=(6, 8, 10), fixed=params)
    return sweep.scan(spec)


class TestTraceSerialization:
    def test_csv_round_trip_is_lossless(self, trace, tmp_path):
        path = str(tmp_path / "trace.csv")
        io.write_trace_csv(trace, path)
        again = io.read_trace_csv(path, params=trace.params)
        np.testing.assert_array_equal(again.times, trace.times)
        np.testing.assert_array_equal(again.p_atom, trace.p_atom)
        np.testing.assert_array_equal(again.p_photon, trace.p_photon)

    def test_csv_layout(self, trace, tmp_path):
        path = str(tmp_path / "trace.csv")
        io.write_trace_csv(trace, path)
        lines = open(path, encoding="utf-8").read().splitlines()
        assert lines[0] == "t,site,channel,probability"
        # time-major, site-minor, atom row before photon row
        assert lines[1].startswith("0,1,atom,")
        assert lines[2].startswith("0,1,photon,")
        assert lines[3].startswith("0,2,atom,")
        assert len(lines) == 1 + trace.times.size * trace.n_sites * 2

    def test_json_round_trip_with_params(self, trace, tmp_path):
        path = str(tmp_path / "trace.json")
        io.write_trace_json(trace, path)
        again = io.read_trace_json(path)
        assert again.params == trace.params
        np.testing.assert_array_equal(again.times, trace.times)
        np.testing.assert_array_equal(again.p_atom, trace.p_atom)

    def test_byte_identical_rewrites(self, trace, tmp_path):
        first = str(tmp_path / "a.csv")
        second = str(tmp_path / "b.csv")
        io.write_trace_csv(trace, first)
        io.write_trace_csv(trace, second)
        assert open(first, "rb").read() == open(second, "rb").read()

    def test_no_temp_files_left_behind(self, trace, tmp_path):
        io.write_trace_csv(trace, str(tmp_path / "trace.csv"))
        assert [p for p in os.listdir(tmp_path) if p.endswith(".tmp")] == []


class TestSweepSerialization:
    def test_csv_round_trip(self, sweep_result, tmp_path):
        path = str(tmp_path / "sweep.csv")
        io.write_sweep_csv(sweep_result, path)
        rows = io.read_sweep_csv(path)
        assert len(rows) == 2 * len(sweep_result.points)
        for point in sweep_result.points:
            atom = next(r for r in rows
                        if r["axis_value"] == point.value and r["channel"] == "atom")
            assert atom["t_opt"] == point.t_opt_atom
            assert atom["p_max"] == point.p_max_atom

    def test_json_round_trip(self, sweep_result, tmp_path):
        path = str(tmp_path / "sweep.json")
        io.write_sweep_json(sweep_result, path)
        payload = json.load(open(path, encoding="utf-8"))
        assert payload["spec"]["axis"] == "size"
        assert payload["points"][0]["p_max_atom"] == sweep_result.points[0].p_max_atom

    def test_header(self, sweep_result, tmp_path):
        path = str(tmp_path / "sweep.csv")
        io.write_sweep_csv(sweep_result, path)
        assert open(path, encoding="utf-8").readline().strip() == "axis_value,channel,t_opt,p_max"


class TestSidecar:
    def test_sidecar_carries_metadata(self, tmp_path):
        data = str(tmp_path / "out.csv")
        open(data, "w").write("x\n")
        sidecar = io.write_metadata_sidecar(data, {"command": "evolve"})
        payload = json.load(open(sidecar, encoding="utf-8"))
        assert payload["tool"] == "cavitychain"
        assert payload["command"] == "evolve"
        assert "created_utc" in payload


class TestFormatting:
    def test_seventeen_significant_digits(self):
        assert io._fmt(1 / 3) == "0.33333333333333331"
        assert float(io._fmt(math.pi)) == math.pi

    def test_params_dict_round_trip(self):
        params = model.SystemParams(n_cavities=7, coupling=2.0, hopping=0.5,
                                    pattern=model.STAGGERED, kappa=-0.4)
        assert io.params_from_dict(io.params_to_dict(params)) == params
