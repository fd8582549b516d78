# tests/test_main.py
import json

import pytest

from main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_euler_json(capsys):
    code, out = _run(capsys, "euler", "4", "--json")
    assert code == EXIT_OK
    assert json.loads(out.out)["coeffs"] == ["0", "1", "11", "11", "1"]


def test_global_flag_before_command(capsys):
    code, out = _run(capsys, "--json", "narayana", "3")
    assert code == EXIT_OK
    assert json.loads(out.out) == {"kind": "polynomial", "label": "N_3", "coeffs": ["0", "1", "3", "1"]}


def test_gep_zero_is_one(capsys):
    code, out = _run(capsys, "gep", "--series", "catalan", "--n", "0", "--json")
    assert code == EXIT_OK
    data = json.loads(out.out)
    assert data["kind"] == "numerator"
    assert data["coeffs"] == ["1"]


def test_gnp_of_geometric(capsys):
    code, out = _run(capsys, "gnp", "--series", "1/(1-x)", "--n", "2", "--json")
    assert code == EXIT_OK
    assert json.loads(out.out)["coeffs"] == ["0", "6", "6"]


def test_numerator_type_b(capsys):
    code, out = _run(capsys, "numerator", "--series", "onepx", "--b", "onepx", "--n", "1",
                     "--flavor", "exponential", "--json")
    assert code == EXIT_OK
    assert json.loads(out.out)["coeffs"] == ["1", "1"]


def test_matrix_positional_and_option(capsys):
    code, out = _run(capsys, "matrix", "Stilde", "2", "--json")
    assert code == EXIT_OK
    assert json.loads(out.out)["rows"] == [["6", "0"], ["6", "12"]]
    code, out = _run(capsys, "matrix", "G", "--n", "2", "--beta", "0", "--json")
    assert json.loads(out.out)["rows"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]


def test_series_and_lagrange(capsys):
    code, out = _run(capsys, "series", "catalan", "--order", "4", "--json")
    assert json.loads(out.out)["coeffs"] == ["1", "1", "2", "5", "14"]
    code, out = _run(capsys, "lagrange", "--series", "onepx", "--beta", "2", "--order", "4", "--json")
    assert code == EXIT_OK
    assert json.loads(out.out)["coeffs"] == ["1", "1", "2", "5", "14"]


def test_human_output(capsys):
    code, out = _run(capsys, "euler", "3")
    assert code == EXIT_OK
    assert "A_3 = x + 4x^2 + x^3" in out.out


@pytest.mark.parametrize("argv", [
    ("series", "foo"),
    ("gep", "--series", "genbinom", "--n", "2"),
    ("matrix", "Q", "2"),
    ("matrix", "U", "2", "--beta", "1"),
    ("matrix", "G"),
    ("series", "x^300000000", "--order", "3"),
    ("series", "1/(1-x", "--order", "3"),
])
def test_argument_errors(capsys, argv):
    code, out = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out.out == ""


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["euler", "-1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["lagrange", "--series", "onepx", "--beta", "1/0"])
    assert info.value.code == 2


def test_check_list(capsys):
    code, out = _run(capsys, "check", "--list", "--json")
    assert code == EXIT_OK
    assert json.loads(out.out)[0]["check_id"] == "T1"


def test_check_run(capsys, tmp_path):
    code, out = _run(capsys, "check", "T1", "EULER", "--max-n", "3", "--json",
                     "--report-dir", str(tmp_path))
    assert code == EXIT_OK
    data = json.loads(out.out)
    assert [r["check_id"] for r in data["reports"]] == ["T1", "EULER"]
    assert data["summary"]["pass"] == 2
    assert (tmp_path / "check_report.json").exists()


def test_check_not_run_fails(capsys):
    code, out = _run(capsys, "check", "T1", "--max-n", "50", "--json")
    assert code == EXIT_FAIL
    assert json.loads(out.out)["reports"][0]["status"] == "not_run"
