import json
import subprocess
import sys

import pytest

from patstat import cli


def run_cli(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_text_output(capsys):
    code, out, _ = run_cli(["poly", "--stat", "inv", "--n", "3", "--avoid", "312"], capsys)
    assert code == 0
    assert out == "1 + 2*q + q^2 + q^3\n"


def test_poly_json_output(capsys):
    code, out, _ = run_cli(
        ["poly", "--stat", "inv", "--n", "3", "--avoid", "312", "--format", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 3, "patterns": ["312"], "stat": "inv", "poly": [1, 2, 1, 1]}


def test_poly_csv_output(capsys):
    code, out, _ = run_cli(
        ["poly", "--stat", "majdes", "--n", "3", "--avoid", "213,321", "--format", "csv"],
        capsys,
    )
    assert code == 0
    assert out.splitlines() == ["q,t,c", "0,0,1", "1,1,1", "2,1,2"]


def test_enumerate_empty_length(capsys):
    code, out, _ = run_cli(["enumerate", "--n", "0", "--avoid", "123"], capsys)
    assert code == 0
    assert out == "ε\n"


def test_enumerate_lines(capsys):
    code, out, _ = run_cli(["enumerate", "--n", "3", "--avoid", "312"], capsys)
    assert code == 0
    assert out.splitlines() == ["123", "132", "213", "231", "321"]


def test_enumerate_json(capsys):
    code, out, _ = run_cli(
        ["enumerate", "--n", "3", "--avoid", "312", "--format", "json"], capsys
    )
    payload = json.loads(out)
    assert payload["avoiders"] == ["123", "132", "213", "231", "321"]


def test_count(capsys):
    code, out, _ = run_cli(["count", "--n", "10", "--avoid", "132"], capsys)
    assert code == 0 and out.strip() == "16796"


def test_formula_command(capsys):
    code, out, _ = run_cli(["formula", "--id", "maj-132-231", "--n", "3"], capsys)
    assert code == 0
    assert out.strip() == "1 + 2*q*t + q^3*t^2"


def test_series_command(capsys):
    code, out, _ = run_cli(["series", "--gf", "gf-231-312-321", "--order", "3"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x^0: 1"
    assert lines[1] == "x^1: 1"
    assert len(lines) == 4


def test_foata_commands(capsys):
    code, out, _ = run_cli(["foata", "--word", "1011"], capsys)
    assert code == 0 and out.strip() == "1011"
    code, out, _ = run_cli(["foata", "--word", "0101", "--inverse"], capsys)
    assert code == 0 and out.strip() == "1001"


def test_decompose_command(capsys):
    code, out, _ = run_cli(["decompose", "--word", "001101001"], capsys)
    assert code == 0
    assert out.splitlines() == ["lambda=3,3,2", "d=2", "beta=2,0,0", "rho=2,0"]
    code, out, _ = run_cli(["decompose", "--word", "001101001", "--format", "json"], capsys)
    assert json.loads(out) == {"lambda": [3, 3, 2], "d": 2, "beta": [2, 0, 0], "rho": [2, 0]}


def test_bijection_commands(capsys):
    code, out, _ = run_cli(["bijection", "--name", "231-321", "--input", "213"], capsys)
    assert code == 0 and out.strip() == "101"
    code, out, _ = run_cli(
        ["bijection", "--name", "231-321", "--input", "101", "--inverse"], capsys
    )
    assert code == 0 and out.strip() == "213"
    code, out, _ = run_cli(
        ["bijection", "--name", "132-213-partition", "--input", "321"], capsys
    )
    assert code == 0 and out.strip() == "2,1"
    code, out, _ = run_cli(
        ["bijection", "--name", "132-213-partition", "--input", "2,1", "--inverse",
         "--n", "3"],
        capsys,
    )
    assert code == 0 and out.strip() == "321"
    code, out, _ = run_cli(["bijection", "--name", "132-to-231", "--input", "4213"], capsys)
    assert code == 0 and out.strip() == "4213"


def test_mahonian_exit_codes(capsys):
    code, out, _ = run_cli(
        ["mahonian", "--left", "132,213", "--right", "132,231", "--n", "6"], capsys
    )
    assert code == 0 and out.strip() == "true"
    code, out, _ = run_cli(["mahonian", "--left", "123", "--right", "321", "--n", "3"], capsys)
    assert code == 1 and out.strip() == "false"


def test_classify_output(capsys):
    code, out, _ = run_cli(
        ["classify", "--k", "3", "--size", "1", "--stat", "maj", "--nmax", "6"], capsys
    )
    assert code == 0
    assert out.splitlines() == ["123", "132 | 231", "213 | 312", "321"]
    code, out, _ = run_cli(
        ["classify", "--k", "3", "--size", "1", "--stat", "maj", "--nmax", "6",
         "--format", "json"],
        capsys,
    )
    assert json.loads(out) == [["123"], ["132", "231"], ["213", "312"], ["321"]]


def test_verify_conjectures_small(capsys):
    code, out, _ = run_cli(["verify", "--suite", "conjectures", "--nmax", "6"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "5/5 checks passed"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["poly", "--stat", "area", "--n", "3"])
    assert info.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as info:
        cli.main(["bogus"])
    assert info.value.code == 2
    capsys.readouterr()


def test_invalid_value_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["poly", "--stat", "inv", "--n", "3", "--avoid", "1x2"])
    assert info.value.code == 2
    capsys.readouterr()


def test_bijection_rejects_wrong_class(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["bijection", "--name", "231-321", "--input", "231"])
    assert info.value.code == 2
    capsys.readouterr()


def test_limit_seconds_aborts(capsys):
    code, out, err = run_cli(
        ["enumerate", "--n", "11", "--avoid", "", "--limit-seconds", "0.02",
         "--format", "json"],
        capsys,
    )
    assert code == 1
    assert out == ""
    assert "time limit" in err


def test_limit_seconds_aborts_classify(capsys):
    code, out, err = run_cli(
        ["classify", "--k", "3", "--size", "2", "--stat", "maj-des", "--nmax", "9",
         "--limit-seconds", "0.0"],
        capsys,
    )
    assert code == 1
    assert out == ""
    assert "time limit" in err


def test_progress_goes_to_stderr_only(capsys):
    code, out, err = run_cli(
        ["enumerate", "--n", "9", "--avoid", "", "--progress", "--format", "csv"],
        capsys,
    )
    assert code == 0
    assert "avoiders" in err
    assert out.splitlines()[0] == "perm"
    assert len(out.splitlines()) == 362881


def test_deterministic_output(capsys):
    args = ["poly", "--stat", "majdes", "--n", "7", "--avoid", "312", "--format", "json"]
    _, first, _ = run_cli(args, capsys)
    _, second, _ = run_cli(args, capsys)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "patstat.cli", "count", "--n", "4", "--avoid", "123"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "14"
