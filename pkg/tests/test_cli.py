import json
import subprocess
import sys

import pytest

from eqcohom.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv, "--output", "json")
    assert code == 0, err
    return json.loads(out)


def test_weyl_report(capsys):
    data = invoke_json(capsys, "weyl", "--type", "B2")
    assert data["order"] == 8
    assert data["longest"] == {"word": "1212", "length": 4}
    assert len(data["elements"]) == 8


def test_weyl_case_insensitive(capsys):
    data = invoke_json(capsys, "weyl", "--type", "b2")
    assert data["type"] == "B2" and data["order"] == 8


def test_gr_count(capsys):
    data = invoke_json(capsys, "gr", "--type", "A1", "--alpha", "1", "--level", "3")
    assert data["count"] == 7
    assert data["fixed_points"][0]["coweight"] == [-3]


def test_gr_default_alpha_for_a_types(capsys):
    data = invoke_json(capsys, "gr", "--type", "A2", "--level", "1")
    assert data["alpha"] == [1, 0]
    assert data["count"] == 10


def test_flag_report(capsys):
    data = invoke_json(capsys, "flag", "--type", "A2", "--theory", "H")
    assert data["rank"] == 6
    assert data["poincare"] == "1 + 2*q^2 + 2*q^4 + q^6"
    assert data["parabolic"] == []
    assert {g["shift"] for g in data["generators"]} == {0, 2, 4, 6}


def test_flag_parabolic_one_based(capsys):
    data = invoke_json(capsys, "flag", "--type", "A2", "--parabolic", "1", "--theory", "K")
    assert data["rank"] == 3
    assert data["poincare"] == "1 + q^2 + q^4"


def test_flag_verify(capsys):
    data = invoke_json(capsys, "flag", "--type", "A2", "--verify")
    assert "order-independence ok" in data["verify"]


def test_flag_mu_theory(capsys):
    data = invoke_json(capsys, "flag", "--type", "A2", "--theory", "MU")
    assert data["rank"] == 6
    # truncation enlarged to 2*dimension so every normal class survives
    assert all(g["euler"]["truncation"] >= 6 for g in data["generators"])


def test_model_round_trip(tmp_path, capsys):
    model = {
        "dimension": 1,
        "points": [
            {"label": "0", "weights": [[2]]},
            {"label": "oo", "weights": [[-2]]},
        ],
        "closure_covers": [["oo", "0"]],
    }
    path = tmp_path / "p1.json"
    path.write_text(json.dumps(model))
    data = invoke_json(capsys, "model", "--input", str(path), "--theory", "K")
    assert data["rank"] == 2
    assert data["poincare"] == "1 + q^2"


def test_model_invalid_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dimension": 2, "points": [{"label": "a", "weights": [[1]]}]}))
    code, out, err = invoke(capsys, "model", "--input", str(path))
    assert code == 2
    assert json.loads(err)["error"]["type"] == "UsageError"


def test_euler_command(capsys):
    data = invoke_json(capsys, "euler", "--theory", "K", "--weights", "1,0;0,1")
    assert data["euler"]["degree"] == 4
    assert data["euler"]["render"].startswith("e^(1,1)")
    data = invoke_json(capsys, "euler", "--theory", "H", "--weights", "", "--rank", "2")
    assert data["euler"]["render"] == "1"


def test_euler_zero_weight_is_validation_error(capsys):
    code, out, err = invoke(capsys, "euler", "--theory", "H", "--weights", "0,0")
    assert code == 2


def test_gr_limit(capsys):
    data = invoke_json(capsys, "gr-limit", "--type", "A1", "--alpha", "1", "--levels", "5")
    assert [lvl["rank"] for lvl in data["levels"]] == [1, 3, 5, 7, 9, 11]
    assert len(data["projections"]) == 5
    assert "coweight lattice of A1" in data["index_description"]


def test_truncation_starves_class_exit_1(tmp_path, capsys):
    # an explicit cutoff below 2*codim wipes a normal class; assembly then
    # rejects it, which surfaces as a wrapped computation error
    model = {
        "dimension": 2,
        "points": [
            {"label": "a", "weights": [[2], [2]]},
            {"label": "b", "weights": [[-2], [-2]]},
        ],
        "closure_covers": [["a", "b"]],
    }
    path = tmp_path / "m.json"
    path.write_text(json.dumps(model))
    code, out, err = invoke(
        capsys, "model", "--input", str(path), "--theory", "MU", "--mu-truncation", "2"
    )
    assert code == 1
    error = json.loads(err)["error"]
    assert error["type"] == "ComputationError"
    assert error["cause"] == "ZeroDivisorEulerClass"
    # the default cutoff adapts to the dimension and succeeds
    data = invoke_json(capsys, "model", "--input", str(path), "--theory", "MU")
    assert data["rank"] == 2


def test_unknown_type_exit_2(capsys):
    code, out, err = invoke(capsys, "weyl", "--type", "E8")
    assert code == 2
    assert json.loads(err)["error"]["type"] == "UsageError"


def test_bad_flag_exit_2(capsys):
    code, out, err = invoke(capsys, "flag", "--type", "A2", "--theory", "X")
    assert code == 2


def test_schema_flag(capsys):
    code, out, err = invoke(capsys, "--schema")
    assert code == 0
    assert "schemas" in out and "v1" in out


def test_json_byte_stability(capsys):
    one = invoke(capsys, "flag", "--type", "B2", "--output", "json")
    two = invoke(capsys, "flag", "--type", "B2", "--output", "json")
    assert one == two
    three = invoke(capsys, "gr", "--type", "A2", "--level", "2", "--output", "json")
    four = invoke(capsys, "gr", "--type", "A2", "--level", "2", "--output", "json")
    assert three == four


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-c", "from eqcohom.cli import main; main()"],
        input="",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert json.loads(proc.stderr)["error"]["type"] == "UsageError"
