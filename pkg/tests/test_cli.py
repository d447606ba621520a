import csv
import io
import json
import math
import pathlib
import re
import subprocess
import sys

import pytest

from landauer.cli import format_float, main, to_json

GOLDEN = pathlib.Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())
SIG12 = re.compile(r"^-?\d\.\d{11}e[+-]\d{2}$")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class FloatToken(str):
    pass


def float_tokens(obj):
    """Raw text of every JSON float, in document order."""
    if isinstance(obj, FloatToken):
        yield obj
    elif isinstance(obj, dict):
        for v in obj.values():
            yield from float_tokens(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from float_tokens(v)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(capsys, name):
    case = CASES[name]
    code, out, err = run(capsys, *case["argv"])
    assert code == case["exit"]
    assert out == (GOLDEN / f"{name}.out").read_text()
    if case["exit"] == 2:
        assert out == ""
        assert "error" in err


def test_entropy_gaussian(capsys):
    code, out, _ = run(capsys, "entropy", "--state", "gaussian", "--sigma", "1", "--n", "4096", "--dx", "0.01")
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "entropy"
    assert data["units"] == "natural-h1"
    assert data["results"]["i_o"] == pytest.approx(0.306853, abs=1e-6)
    assert data["results"]["bound_satisfied"] is True


def test_entropy_uniform(capsys):
    code, out, err = run(capsys, "entropy", "--state", "uniform", "--length", "2", "--n", "4096", "--dx", "0.01")
    assert code == 0
    assert json.loads(out)["results"]["h_x"] == pytest.approx(math.log(2), abs=1e-6)
    assert "sharp-edged" in err


def test_every_float_has_12_digits(capsys):
    for name, case in CASES.items():
        code, out, _ = run(capsys, *case["argv"])
        if not out or out.startswith("p_rms"):
            continue
        floats = list(float_tokens(json.loads(out, parse_float=FloatToken)))
        assert floats, name
        assert all(SIG12.match(t) for t in floats), name


@pytest.mark.parametrize("cmd", [
    ["entropy", "--state", "random", "--seed", "3"],
    ["erase", "--mode", "ontic"],
    ["measure", "--sigma-before", "2", "--sigma-after", "0.5", "--verify-numerically"],
    ["demon", "--mass", "1e-26", "--temperature", "10", "--photon-energy", "1e-25"],
    ["demon", "--mass", "1e-26", "--temperature", "10", "--sweep", "0.5,2", "--format", "json"],
    ["uncertainty-check", "--trials", "5"],
])
def test_json_is_single_document(capsys, cmd):
    code, out, _ = run(capsys, *cmd, "--format", "json") if "--format" not in cmd else run(capsys, *cmd)
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"command", "inputs", "results", "units"}


def test_erase_values(capsys):
    _, out, _ = run(capsys, "erase", "--mode", "ontic", "--temperature", "300", "--ratio", "2")
    res = json.loads(out)["results"]
    assert res["work_on_system"] == pytest.approx(1.380649e-23 * 300 * math.log(2), rel=1e-11)
    for mode in ("epistemic-left", "epistemic-right"):
        _, out, _ = run(capsys, "erase", "--mode", mode, "--temperature", "300")
        res = json.loads(out)["results"]
        assert res["work_on_system"] == 0 and res["delta_s_system"] == 0


def test_erase_rejects_ratio_one(capsys):
    code, out, err = run(capsys, "erase", "--mode", "ontic", "--ratio", "1")
    assert code == 2 and out == "" and "compression_ratio" in err


def test_erase_bad_mode(capsys):
    assert run(capsys, "erase", "--mode", "sideways")[0] == 2


def test_measure_ledger(capsys):
    _, out, _ = run(capsys, "measure", "--sigma-before", "1", "--sigma-after", "0.5", "--temperature", "300")
    res = json.loads(out)["results"]
    assert res["delta_s_system"] == pytest.approx(1.380649e-23 * math.log(2), rel=1e-11)
    assert "numerical" not in res


def test_measure_verify(capsys):
    code, out, _ = run(capsys, "measure", "--sigma-before", "1", "--sigma-after", "0.5",
                       "--verify-numerically", "--n", "4096", "--dx", "0.01")
    assert code == 0
    num = json.loads(out)["results"]["numerical"]
    assert num["rel_error_x"] < 0.01 and num["rel_error_p"] < 0.01
    assert num["within_tolerance"] is True


def test_measure_verify_mismatch_exit_4(capsys):
    code, out, _ = run(capsys, "measure", "--sigma-before", "1", "--sigma-after", "0.5",
                       "--verify-numerically", "--n", "16", "--dx", "1.6")
    assert code == 4
    assert json.loads(out)["results"]["numerical"]["within_tolerance"] is False


def test_grid_error_exit_3(capsys):
    code, out, err = run(capsys, "entropy", "--state", "gaussian", "--sigma", "5")
    assert code == 3 and out == "" and "grid" in err
    assert run(capsys, "entropy", "--n", "100")[0] == 3
    assert run(capsys, "uncertainty-check", "--trials", "2", "--n", "16")[0] == 3


def test_bound_violation_exit_1(capsys, monkeypatch):
    from landauer import entropy

    real = entropy.report_from_entropies
    monkeypatch.setattr(entropy, "joint_information",
                        lambda state, tol=1e-6: real(0.0, 0.0, tol))
    code, out, _ = run(capsys, "entropy", "--state", "gaussian")
    assert code == 1
    assert json.loads(out)["results"]["bound_satisfied"] is False
    assert run(capsys, "uncertainty-check", "--trials", "3")[0] == 1


def test_bound_tolerance_override(capsys, monkeypatch):
    from landauer import entropy

    real = entropy.report_from_entropies
    monkeypatch.setattr(entropy, "joint_information",
                        lambda state, tol=1e-6: real(0.3, 0.0, tol))
    assert run(capsys, "entropy")[0] == 1
    assert run(capsys, "entropy", "--bound-tolerance", "0.01")[0] == 0


def test_demon_sweep_csv(capsys):
    code, out, _ = run(capsys, "demon", "--mass", "6.6335e-26", "--temperature", "300", "--sweep", "0.01,0.25,1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3
    ratios = [float(r["ratio"]) for r in rows]
    assert ratios == sorted(ratios, reverse=True) and len(set(ratios)) == 3
    assert ratios[0] == pytest.approx(math.sqrt(300), rel=1e-11)


def test_demon_boundary(capsys):
    _, out, _ = run(capsys, "demon", "--mass", "6.6335e-26", "--temperature", "300", "--photon-fraction", "3")
    res = json.loads(out)["results"]
    assert res["ratio"] == 1.0
    assert res["sorting_feasible"] is True and res["low_energy_photon"] is False


@pytest.mark.parametrize("argv", [
    ["demon", "--mass", "1e-26", "--temperature", "300"],
    ["demon", "--mass", "1e-26", "--temperature", "300", "--photon-fraction", "1", "--sweep", "1,2"],
    ["demon", "--mass", "1e-26", "--temperature", "300", "--photon-fraction", "1", "--photon-energy", "1"],
    ["demon", "--mass", "-1", "--temperature", "300", "--photon-fraction", "1"],
    ["demon", "--mass", "1e-26", "--temperature", "300", "--sweep", "0.1,-1"],
    ["uncertainty-check", "--trials", "-3"],
    ["uncertainty-check"],
    ["entropy", "--state", "triangle"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_uncertainty_check_deterministic(capsys):
    outs = [run(capsys, "uncertainty-check", "--trials", "20", "--seed", "7")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    res = json.loads(outs[0])["results"]
    assert res["min_margin"] >= -1e-6
    assert res["min_margin"] <= res["median_margin"] <= res["max_margin"]


@pytest.mark.parametrize("fmt", ["csv", "table"])
def test_other_formats(capsys, fmt):
    code, out, _ = run(capsys, "erase", "--mode", "ontic", "--format", fmt)
    assert code == 0
    assert "work_on_system" in out
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 2 and len(rows[0]) == len(rows[1])


def test_precision_override(capsys, monkeypatch):
    monkeypatch.setenv("LANDAUER_DIGITS", "4")
    _, out, _ = run(capsys, "erase", "--mode", "ontic")
    assert '"work_on_system": 2.871e-21' in out


def test_format_float():
    assert format_float(0.0) == "0.00000000000e+00"
    assert format_float(-2.5) == "-2.50000000000e+00"
    assert json.loads(to_json({"a": [1, 2.0, True, None]})) == {"a": [1, 2.0, True, None]}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "landauer", "erase", "--mode", "epistemic-left"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "erase_epistemic_left.out").read_text()
