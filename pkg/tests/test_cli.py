import json
import math

import numpy as np
import pytest

from cavitychain import cli, io


class TestParseAngle:
    @pytest.mark.parametrize("token,expected", [
        ("pi/4", math.pi / 4),
        ("pi/6", math.pi / 6),
        ("pi", math.pi),
        ("3*pi/8", 3 * math.pi / 8),
        ("0.5", 0.5),
        ("0", 0.0),
    ])
    def test_accepted(self, token, expected):
        assert cli.parse_angle(token) == pytest.approx(expected)

    def test_rejected(self):
        with pytest.raises(ValueError):
            cli.parse_angle("tau/4")


class TestEvolveCommand:
    def test_writes_csv_and_sidecar(self, tmp_path):
        out = str(tmp_path / "trace.csv")
        code = cli.main(["evolve", "--n", "11", "--lambda", "5", "--xi", "1",
                         "--beta", "pi/4", "--t-max", "10", "--grid-points", "51",
                         "--output", out])
        assert code == 0
        trace = io.read_trace_csv(out)
        assert trace.times.size == 51
        assert trace.n_sites == 11
        meta = json.load(open(out + ".meta.json", encoding="utf-8"))
        assert meta["params"]["n_cavities"] == 11
        assert meta["params"]["beta"] == pytest.approx(math.pi / 4)

    def test_json_output(self, tmp_path):
        out = str(tmp_path / "trace.json")
        code = cli.main(["evolve", "--n", "5", "--t-max", "4",
                         "--grid-points", "11", "--format", "json",
                         "--output", out])
        assert code == 0
        trace = io.read_trace_json(out)
        assert trace.params.n_cavities == 5

    def test_single_cavity_rabi_columns(self, tmp_path):
        out = str(tmp_path / "rabi.csv")
        code = cli.main(["evolve", "--n", "1", "--lambda", "2", "--beta", "pi/2",
                         "--t-max", "3", "--grid-points", "61", "--output", out])
        assert code == 0
        trace = io.read_trace_csv(out)
        expected = np.cos(math.sqrt(2) * 2.0 * trace.times) ** 2
        np.testing.assert_allclose(trace.p_atom[:, 0], expected, atol=1e-12)

    def test_coupling_scales_with_hopping_units(self, tmp_path):
        out = str(tmp_path / "trace.csv")
        cli.main(["evolve", "--n", "5", "--lambda", "10", "--xi", "2",
                  "--t-max", "4", "--grid-points", "5", "--output", out])
        meta = json.load(open(out + ".meta.json", encoding="utf-8"))
        assert meta["params"]["coupling"] == 20.0
        cli.main(["evolve", "--n", "5", "--lambda", "10", "--xi", "2",
                  "--absolute-units", "--t-max", "4", "--grid-points", "5",
                  "--output", out])
        meta = json.load(open(out + ".meta.json", encoding="utf-8"))
        assert meta["params"]["coupling"] == 10.0

    def test_staggered_run(self, tmp_path):
        out = str(tmp_path / "stag.csv")
        code = cli.main(["evolve", "--n", "11", "--pattern", "staggered",
                         "--kappa", "-0.2", "--beta", "pi/4", "--t-max", "8",
                         "--grid-points", "21", "--output", out])
        assert code == 0

    def test_invalid_params_exit_one(self, tmp_path, capsys):
        out = str(tmp_path / "x.csv")
        code = cli.main(["evolve", "--n", "10", "--pattern", "staggered",
                         "--kappa", "-0.2", "--output", out])
        assert code == 1
        assert "odd" in capsys.readouterr().err

    def test_missing_kappa_exit_one(self, tmp_path):
        out = str(tmp_path / "x.csv")
        assert cli.main(["evolve", "--n", "11", "--pattern", "staggered",
                         "--output", out]) == 1

    def test_unwritable_path_exit_three(self, tmp_path):
        out = str(tmp_path / "missing_dir" / "x.csv")
        assert cli.main(["evolve", "--n", "5", "--t-max", "4",
                         "--grid-points", "5", "--output", out]) == 3

    def test_unknown_flag_rejected(self):
        with pytest.raises(SystemExit):
            cli.main(["evolve", "--n", "5", "--frobnicate", "--output", "x.csv"])


class TestSweepCommand:
    def test_beta_sweep(self, tmp_path):
        out = str(tmp_path / "sweep.csv")
        code = cli.main(["sweep", "--axis", "beta", "--values", "0,pi/6,pi/4",
                         "--n", "20", "--lambda", "10", "--output", out])
        assert code == 0
        rows = io.read_sweep_csv(out)
        atom = [r["p_max"] for r in rows if r["channel"] == "atom"]
        assert atom[0] > atom[1] > atom[2]
        meta = json.load(open(out + ".meta.json", encoding="utf-8"))
        assert meta["spec"]["axis"] == "beta"

    def test_encoding_width_sweep(self, tmp_path):
        out = str(tmp_path / "enc.csv")
        code = cli.main(["sweep", "--axis", "k", "--values", "1,2",
                         "--n", "20", "--lambda", "10", "--output", out])
        assert code == 0
        rows = io.read_sweep_csv(out)
        atom = [r["p_max"] for r in rows if r["channel"] == "atom"]
        assert atom[1] > atom[0]

    def test_size_sweep_with_encoding_objective(self, tmp_path):
        out = str(tmp_path / "size.csv")
        code = cli.main(["sweep", "--axis", "size", "--values", "12,16",
                         "--encoding-k", "2", "--n", "12", "--lambda", "10",
                         "--output", out])
        assert code == 0
        assert len(io.read_sweep_csv(out)) == 4

    def test_empty_values_exit_one(self, tmp_path):
        out = str(tmp_path / "sweep.csv")
        assert cli.main(["sweep", "--axis", "size", "--values", ",",
                         "--n", "10", "--output", out]) == 1


class TestVerifyCommand:
    def test_passes_with_defaults_scaled_down(self, capsys):
        code = cli.main(["verify", "--n-max", "6", "--draws", "6"])
        assert code == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "FAIL" not in out

    def test_corrupted_coupling_fails(self, capsys):
        code = cli.main(["verify", "--n-max", "6", "--draws", "6",
                         "--inject-lambda-error", "0.05"])
        assert code == 2
        assert "FAIL" in capsys.readouterr().out
