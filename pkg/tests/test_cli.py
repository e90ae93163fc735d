"""Command line entry points: exit codes, output layout, determinism."""

import json
import math

import pytest

from nctorus.cli import main, parse_complex, parse_int_pair, parse_theta


# ----------------------------------------------------------------- parsing

def test_parse_theta_expressions():
    assert parse_theta("0.2") == 0.2
    assert abs(parse_theta("sqrt2-1") - (math.sqrt(2) - 1)) < 1e-15
    assert parse_theta("1/2") == 0.5
    assert abs(parse_theta("(1+sqrt5)/2") - (1 + math.sqrt(5)) / 2) < 1e-15
    assert parse_theta(" 3 * 0.1 ") == pytest.approx(0.3)
    assert parse_theta("-0.3+1") == pytest.approx(0.7)


def test_parse_theta_rejects_garbage():
    for bad in ("bogus", "1+", "sqrt", "(1", "2**3", "1//2", ""):
        with pytest.raises(ValueError):
            parse_theta(bad)


def test_parse_complex():
    assert parse_complex("1.5,-2") == 1.5 - 2j
    assert parse_complex("0.25") == 0.25 + 0j
    with pytest.raises(ValueError):
        parse_complex("1,2,3")


def test_parse_int_pair():
    assert parse_int_pair("3,-2") == (3, -2)
    with pytest.raises(ValueError):
        parse_int_pair("3")
    with pytest.raises(ValueError):
        parse_int_pair("a,b")


# -------------------------------------------------------------- exit codes

def _by_name(doc):
    return {c["name"]: c for c in doc["checks"]}


def test_algebra_check_passes(capsys):
    assert main(["algebra-check", "--theta", "0.3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"]
    assert _by_name(doc)["associativity"]["pass"]
    assert doc["schema"] == 1


def test_non_coprime_label_is_usage_error(capsys):
    assert main(["theta-basis", "--nm", "2,4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_wrong_tau_sign_is_usage_error(capsys):
    assert main(["theta-basis", "--tau", "0,1"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_bad_theta_expression(capsys):
    assert main(["algebra-check", "--theta", "nope"]) == 2
    assert "error:" in capsys.readouterr().err


def test_theta_basis_reports_width(capsys):
    assert main(["theta-basis", "--nm", "1,2", "--theta", "0.3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sigma"] == [1.25, 0.0]
    assert doc["count"] == 2
    assert doc["dbar_residual"] < 1e-12
    assert len(doc["vectors"]) == 2


def test_tensor_command_cross_checks(capsys):
    assert main(["tensor", "--theta", "0.2", "--alpha", "1", "--beta", "2",
                 "--z", "0.3", "--delta", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"]
    assert doc["abs_diff"] <= 1e-9 * (1 + abs(complex(*doc["direct"])))
    assert doc["q0"] is not None


def test_tensor_rejects_out_of_range_indices(capsys):
    assert main(["tensor", "--alpha", "7"]) == 2
    capsys.readouterr()
    assert main(["tensor", "--delta", "-1"]) == 2
    capsys.readouterr()


def test_tensor_unsolvable_pair_reports_zero(capsys):
    # labels (1,2) x (1,2): gcd(m, l) = 2 leaves half the pairs empty
    assert main(["tensor", "--kl", "1,2", "--alpha", "0", "--beta", "1",
                 "--delta", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["q0"] is None
    assert doc["pass"]
    assert abs(complex(*doc["closed_form"])) == 0.0


def test_structure_constants_json(capsys):
    assert main(["structure-constants", "--theta", "0.2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    table = doc["structure_constants"]
    assert table["shape"] == [2, 3, 5]
    assert len(table["entries"]) == 30
    assert doc["pass"]
    assert all(c["pass"] for c in doc["checks"])


def test_verify_all_green(capsys):
    assert main(["verify-all", "--theta", "0.2", "--seed", "5"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"]
    assert [c["name"] for c in doc["checks"] if not c.get("pass", True)] == []


def test_verify_all_skips_degenerate_left_label(capsys):
    # k - l*theta = 0 disables the mirrored checks but must not fail the run
    assert main(["verify-all", "--theta", "1/2", "--nm", "1,1",
                 "--kl", "1,2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"]
    assert [c for c in doc["checks"] if c.get("skipped")]


# ------------------------------------------------------------ file output

def test_output_file_and_determinism(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    args = ["structure-constants", "--theta", "0.2", "--seed", "3"]
    assert main(args + ["--output", str(out1)]) == 0
    assert main(args + ["--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_csv_layout(tmp_path):
    out = tmp_path / "table.csv"
    assert main(["structure-constants", "--format", "csv",
                 "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "alpha,beta,gamma,re,im,q0"
    assert len(lines) == 1 + 30


def test_verify_all_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify-all", "--theta", "sqrt2-1", "--output", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["pass"]
    assert doc["config"]["theta"] == math.sqrt(2) - 1
