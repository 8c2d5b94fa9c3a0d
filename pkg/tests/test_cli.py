import io
import json
import math

import pandas as pd
import pytest

from doamachine.cli import main, parse_snr_list, parse_theta0

LAYOUT_A = {"positions": ["0", "1.2", "6"]}
LAYOUT_B = {"positions": ["0", "3.6", "8.1"]}


def run(argv):
    stdout = io.StringIO()
    code = main(argv, stdout=stdout)
    return code, stdout.getvalue()


def test_parse_theta0():
    assert parse_theta0("asin:3/10") == pytest.approx(math.asin(0.3))
    assert parse_theta0("0.25") == 0.25
    with pytest.raises(ValueError):
        parse_theta0("asin:3/2")
    with pytest.raises(ValueError):
        parse_theta0("north")


def test_parse_snr_list():
    assert parse_snr_list("0, 10,inf") == [0.0, 10.0, float("inf")]
    with pytest.raises(ValueError):
        parse_snr_list("10,loud")


def test_check_example_a(layout_file):
    code, out = run(["check", "--layout", layout_file(LAYOUT_A)])
    assert code == 2
    content = json.loads(out)
    assert content["report"]["witness_q"] == [1, 5, 4]
    assert content["report"]["I"] == "5/6"
    assert content["manifest"]["command"] == "check"
    assert content["manifest"]["input_digest"].startswith("sha256:")


def test_check_example_b(layout_file):
    code, out = run(["check", "--layout", layout_file(LAYOUT_B)])
    assert code == 0
    assert json.loads(out)["report"]["verdict"] == "Identifiable"


def test_check_boundary(layout_file):
    code, _ = run(["check", "--layout", layout_file({"positions": ["0", "1", "2"]})])
    assert code == 3


def test_check_pair_subset(layout_file):
    code, out = run(["check", "--layout", layout_file({"positions": ["0", "3.6", "8.1"], "pairs": [[1, 2]]})])
    assert code == 2
    assert json.loads(out)["report"]["pairs"] == [[1, 2]]


def test_check_malformed_file(layout_file, capsys):
    code, out = run(["check", "--layout", layout_file({"positions": ["0", "zero"]})])
    assert code == 1
    assert out == ""
    assert "positions" in capsys.readouterr().err


def test_usage_error_exits_with_one(capsys):
    code, out = run(["check"])
    assert code == 1
    assert out == ""
    assert "--layout" in capsys.readouterr().err


def test_wpdp_to_stdout(layout_file):
    code, out = run(["wpdp", "--layout", layout_file(LAYOUT_B), "--grid", "101"])
    assert code == 0
    df = pd.read_csv(io.StringIO(out), comment="#")
    assert df.shape == (101, 4)
    assert list(df.columns) == ["sine", "psi_1", "psi_2", "psi_3"]


def test_wpdp_to_file(layout_file, tmp_path):
    path = tmp_path / "pattern.csv"
    code, out = run(["wpdp", "--layout", layout_file(LAYOUT_A), "--grid", "2401", "--out", str(path)])
    assert code == 0
    assert json.loads(out)["rows"] == 2401

    df = pd.read_csv(path, comment="#")
    plus = (df["sine"] - 5 / 6).abs().idxmin()
    minus = (df["sine"] + 5 / 6).abs().idxmin()
    gap = (df.loc[plus, ["psi_1", "psi_2", "psi_3"]] - df.loc[minus, ["psi_1", "psi_2", "psi_3"]]).to_numpy()
    # the two rows agree up to a whole turn
    assert all(abs(math.remainder(value, 2 * math.pi)) <= 1e-9 for value in gap)


def test_wpdp_rejects_small_grid(layout_file, capsys):
    code, out = run(["wpdp", "--layout", layout_file(LAYOUT_B), "--grid", "1"])
    assert code == 1
    assert out == ""
    assert "grid_size must be" in capsys.readouterr().err


def test_simulate_noise_free(layout_file):
    argv = ["simulate", "--layout", layout_file(LAYOUT_B), "--theta0", "asin:3/10", "--snr", "inf", "--trials", "1"]
    code, out = run(argv)
    assert code == 0
    (result,) = json.loads(out)["results"]
    assert result["snr_db"] == "inf"
    assert result["rmse_rad"] <= (2 / 4000) / math.cos(math.asin(0.3))


def test_simulate_is_reproducible(layout_file):
    argv = [
        "simulate", "--layout", layout_file(LAYOUT_B), "--theta0", "0.3",
        "--snr", "0,10", "--trials", "25", "--seed", "17", "--grid", "1001",
    ]
    assert run(argv) == run(argv)


def test_simulate_rejects_zero_trials(layout_file):
    code, out = run(["simulate", "--layout", layout_file(LAYOUT_B), "--theta0", "0.3", "--trials", "0"])
    assert code == 1
    assert out == ""


def test_search():
    code, out = run(["search", "--n", "3", "--max-aperture", "6", "--step", "1.2"])
    assert code == 0
    layouts = json.loads(out)["layouts"]
    assert ["0", "6/5", "6"] not in [entry["positions"] for entry in layouts]
    assert all(entry["verdict"] != "Unidentifiable" for entry in layouts)


def test_search_guard(capsys):
    code, out = run(["search", "--n", "3", "--max-aperture", "100", "--step", "1/1000"])
    assert code == 1
    assert "step" in capsys.readouterr().err
