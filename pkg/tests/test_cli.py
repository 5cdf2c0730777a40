import json
import subprocess
import sys

import pytest

from qrational.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_qrat_text_and_latex(capsys):
    code, out, _ = run(capsys, "qrat", "5/2")
    assert code == 0
    assert out.strip() == "[5/2]_q = (1 + 2q + q^2 + q^3) / (1 + q)"
    code, out, _ = run(capsys, "qrat", "5/2", "--format", "latex")
    assert out.strip() == "\\frac{1+2q+q^{2}+q^{3}}{1+q}"


def test_qrat_json_and_cf_input(capsys):
    code, out, _ = run(capsys, "qrat", "[2,3,1,2]", "--format", "json")
    data = json.loads(out)
    assert (data["r"], data["s"]) == ("25", "11")
    assert data["num"]["coeffs"] == ["1", "3", "4", "5", "5", "4", "2", "1"]
    assert data["reduced"] is False


def test_reduced_input_is_flagged(capsys):
    code, out, _ = run(capsys, "qrat", "10/4")
    assert code == 0 and "(reduced from 10/4)" in out


def test_environment_default_format(capsys, monkeypatch):
    monkeypatch.setenv("QRAT_FORMAT", "json")
    code, out, _ = run(capsys, "expand", "7/5")
    data = json.loads(out)
    assert data["regular"] == {"kind": "regular", "coeffs": [1, 2, 1, 1]}
    assert data["negative"] == {"kind": "negative", "coeffs": [2, 2, 3]}


def test_malformed_input_exits_2(capsys):
    code, _, err = run(capsys, "qrat", "7/x")
    assert code == 2
    assert "usage:" in err and "error:" in err
    code, _, _ = run(capsys, "convert", "[1,2")
    assert code == 2


def test_domain_error_exits_1(capsys):
    code, _, err = run(capsys, "qrat", "4/6")
    assert code == 1 and "farey" in err
    code, _, _ = run(capsys, "jones", "1/1")
    assert code == 1


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["qrat"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "--max-sum", "0"])
    assert info.value.code == 2


def test_convert_and_continuant(capsys):
    _, out, _ = run(capsys, "convert", "[1,2,1,1]")
    assert out.strip() == "[1,2,1,1] = [[2,2,3]] = 7/5"
    _, out, _ = run(capsys, "continuant", "3,2")
    assert out.strip() == "1 + 2q + q^2 + q^3"
    _, out, _ = run(capsys, "continuant", "[1,2,1,1]")
    assert out.strip() == "q^-2 + q^-1 + 2 + 2q + q^2"


def test_matrix(capsys):
    code, out, _ = run(capsys, "matrix", "5/2", "--format", "json")
    data = json.loads(out)
    assert data["det"] == {"min_exp": 3, "coeffs": ["1"]}
    _, out, _ = run(capsys, "matrix", "--generator", "S")
    assert out.splitlines()[0] == "S_q^1"
    assert run(capsys, "matrix")[0] == 2


def test_farey(capsys):
    _, out, _ = run(capsys, "farey", "--depth", "2")
    lines = out.splitlines()
    assert len(lines) == 9
    assert any(line.startswith("depth 2  4/1") and "right edge q^3" in line for line in lines)


def test_quiddity(capsys):
    _, out, _ = run(capsys, "quiddity", "--check", "3,3,1,2,4,3,1,2,4,1")
    assert out.strip() == "Triangulation, M_q = (-q^7) Id"
    _, out, _ = run(capsys, "quiddity", "--check", "1,1,1,1,1,1")
    assert out.strip() == "ThreeDDissection, M_q = (1) Id"
    _, out, _ = run(capsys, "quiddity", "5/2", "--format", "json")
    data = json.loads(out)
    assert data["quiddity"] == [3, 2, 1, 3, 2, 1]
    assert data["labels"] == ["1/0", "3/1", "5/2", "2/1", "1/1", "0/1"]


def test_closures(capsys):
    _, out, _ = run(capsys, "closures", "25/11")
    assert "closures by size: 1 3 4 5 5 4 2 1" in out
    _, out, _ = run(capsys, "closures", "5/2", "--multivariate")
    assert out.splitlines()[-5:] == ["{}", "{1}", "{3}", "{1,3}", "{1,2,3}"]
    _, out, _ = run(capsys, "closures", "25/11", "--prime", "--format", "json")
    assert json.loads(out)["counts"] == [1, 2, 2, 3, 2, 1]
    _, out, _ = run(capsys, "closures", "8/3", "--jones", "--format", "json")
    assert json.loads(out)["counts"] == [1, 1, 2, 1, 2, 1]


def test_jones(capsys):
    _, out, _ = run(capsys, "jones", "15/4", "--v-power", "16", "--v-sign", "-")
    assert out.splitlines() == [
        "1 + q + 2q^2 + 3q^3 + 2q^4 + 3q^5 + 2q^6 + q^7",
        "V(t) = -t^8 + t^7 - 2t^6 + 3t^5 - 2t^4 + 3t^3 - 2t^2 + t",
    ]
    for route in ("continuant", "regular", "closures"):
        _, out, _ = run(capsys, "jones", "8/3", "--route", route, "--format", "json")
        assert json.loads(out)["j"]["coeffs"] == ["1", "1", "2", "1", "2", "1"]
    _, out, _ = run(capsys, "jones", "8/3", "--latex")
    assert out.strip() == "1+q+2q^{2}+q^{3}+2q^{4}+q^{5}"


def test_sequences(capsys):
    _, out, _ = run(capsys, "fib", "5")
    assert out.splitlines() == ["F_5 = 1 + 2q + q^2 + q^3", "F~_5 = 1 + q + 2q^2 + q^3"]
    _, out, _ = run(capsys, "pell", "4", "--triangle")
    assert out.splitlines()[-1] == "1 2 3 3 2 1"
    _, out, _ = run(capsys, "pell", "2", "--triangle", "--csv")
    assert out.splitlines() == ["row,k,coefficient", "1,0,1", "2,0,1", "2,1,1"]
    _, out, _ = run(capsys, "fib", "3", "--triangle", "--bfile")
    assert out.splitlines() == ["1 1", "2 1", "3 1", "4 1", "5 1", "6 1"]
    assert run(capsys, "fib", "0")[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "equality", "--max-sum", "20")
    assert code == 0 and out.startswith("PASS equality")
    code, out, _ = run(capsys, "verify", "--suite", "jones", "--suite", "mediant", "--depth", "3", "--max-sum", "10", "--format", "json")
    data = json.loads(out)
    assert data["seed"] == 42 and [r["suite"] for r in data["reports"]] == ["jones", "mediant"]
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_conjectures(capsys):
    code, out, _ = run(capsys, "conjectures", "--max-sum", "12")
    assert code == 0
    assert "unimodality counterexamples: 0" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qrational", "qrat", "3/2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "[3/2]_q = (1 + q + q^2) / (1 + q)"
