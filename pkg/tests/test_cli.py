"""End-to-end tests of the command-line interface: output formats, exit
codes, file arguments, and the environment budget override."""

import json

import pytest

from catmoments.cli import main
from catmoments.seqspec import CATALOG

SIGMA_DROP = json.dumps(
    {"prefix": ["1", "0"], "tail": {"kind": "constant", "value": "0"}, "start": 0}
)
TAU_ZERO = json.dumps(
    {"prefix": [], "tail": {"kind": "constant", "value": "0"}, "start": 1}
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_text(capsys):
    code, out, err = run(capsys, "gen", "--name", "catalan", "-n", "7")
    assert code == 0 and err == ""
    assert out.strip() == "1 1 2 5 14 42 132 429"


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "--name", "bell", "-n", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "bell"
    assert data["terms"] == ["1", "1", "2", "5", "15", "52", "203"]
    assert data["sigma"]["tail"] == {"kind": "polynomial", "coeffs": ["1", "1"]}


def test_gen_csv(capsys):
    code, out, _ = run(capsys, "gen", "--name", "catalan", "-n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,term", "0,1", "1,1", "2,2"]


def test_gen_explicit_weights(capsys):
    sigma = json.dumps(
        {"prefix": ["1"], "tail": {"kind": "constant", "value": "2"}, "start": 0}
    )
    tau = json.dumps(
        {"prefix": [], "tail": {"kind": "constant", "value": "1"}, "start": 1}
    )
    code, out, _ = run(capsys, "gen", "--sigma", sigma, "--tau", tau, "-n", "5")
    assert code == 0
    assert out.strip() == "1 1 2 5 14 42"


def test_gen_rejects_unknown_name(capsys):
    code, _, err = run(capsys, "gen", "--name", "fibonacci")
    assert code == 2
    assert "fibonacci" in err


def test_gen_requires_weights(capsys):
    code, _, err = run(capsys, "gen")
    assert code == 2
    assert "--sigma" in err


def test_gen_rejects_wrong_start(capsys):
    # a start-1 payload in the start-0 slot
    code, _, err = run(capsys, "gen", "--sigma", TAU_ZERO, "--tau", TAU_ZERO)
    assert code == 2
    assert "start must be 0" in err


def test_gen_rejects_bad_json(capsys):
    code, _, err = run(capsys, "gen", "--sigma", "{not json", "--tau", TAU_ZERO)
    assert code == 2
    assert "not valid JSON" in err


def test_matrix_text(capsys):
    code, out, _ = run(capsys, "matrix", "--name", "catalan", "-n", "2")
    assert code == 0
    assert out.splitlines() == ["1", "1 1", "2 3 1"]


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "matrix", "--name", "catalan", "-n", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["rows"][3] == ["5", "9", "5", "1"]


def test_stieltjes_pass(capsys):
    code, out, _ = run(capsys, "stieltjes", "--name", "catalan", "--depth", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "verdict: PASS (depth 5)"
    assert lines[2] == "0 1 1"


def test_stieltjes_negative_control(capsys):
    code, out, _ = run(capsys, "stieltjes", "--terms", "1,2,1,2", "--depth", "1")
    assert code == 1
    assert "verdict: FAIL" in out
    assert "first negative: det0 at k=1 value -3" in out


def test_stieltjes_csv(capsys):
    code, out, _ = run(capsys, "stieltjes", "--name", "catalan", "--depth", "2",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["k,det0,det1", "0,1,1", "1,1,1", "2,1,1"]


def test_stieltjes_json_round_trip(capsys):
    code, out, _ = run(capsys, "stieltjes", "--name", "hexagonal", "--depth", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "hexagonal"
    assert data["verdict"] == "PASS"
    assert len(data["dets0"]) == 4


def test_stieltjes_terms_from_file(capsys, tmp_path):
    path = tmp_path / "terms.txt"
    path.write_text("1 1 2 5\n14 42\n")
    code, out, _ = run(capsys, "stieltjes", "--terms", f"@{path}", "--depth", "2")
    assert code == 0
    assert "verdict: PASS" in out


def test_stieltjes_insufficient_terms(capsys):
    code, _, err = run(capsys, "stieltjes", "--terms", "1,1,2", "--depth", "3")
    assert code == 2
    assert "need 8 terms" in err


def test_hankel_det_product_column(capsys):
    code, out, _ = run(capsys, "hankel-det", "--name", "delannoy", "--depth", "2")
    assert code == 0
    assert out.splitlines()[2] == "k=2 det=32 product=32 ok"


def test_hankel_det_shifted_family(capsys):
    code, out, _ = run(capsys, "hankel-det", "--name", "catalan", "--depth", "2",
                       "--shift", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["k,det", "0,1", "1,1", "2,1"]


def test_tp_pqst_true(capsys):
    code, out, _ = run(capsys, "tp", "--pqst", "1,1,2,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "TRUE"
    assert data["criterion"] == "pqst_criterion"


def test_tp_pqst_false(capsys):
    code, out, _ = run(capsys, "tp", "--pqst", "1,3,2,1")
    assert code == 1
    assert "verdict: FALSE" in out


def test_tp_pqst_arity(capsys):
    code, _, err = run(capsys, "tp", "--pqst", "1,2,3")
    assert code == 2
    assert "need exactly 4" in err


def test_tp_catalog_name(capsys):
    code, out, _ = run(capsys, "tp", "--jacobi-name", "factorial", "--depth", "6",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "TRUE"
    assert data["criterion"] == "leading_minors"
    assert "1, 2, 6, 24, 120, 720, 5040" in data["detail"]


def test_tp_budget_override(capsys, monkeypatch):
    args = ("tp", "--sigma", SIGMA_DROP, "--tau", TAU_ZERO, "--depth", "4",
            "--format", "json")
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert json.loads(out)["verdict"] == "TRUE"
    monkeypatch.setenv("MOMENTS_BUDGET", "1")
    code, out, _ = run(capsys, *args)
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] == "INCONCLUSIVE"
    assert "budget" in data["detail"]


def test_tp_budget_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("MOMENTS_BUDGET", "lots")
    code, _, err = run(capsys, "tp", "--jacobi-name", "catalan")
    assert code == 2
    assert "MOMENTS_BUDGET" in err
    monkeypatch.setenv("MOMENTS_BUDGET", "0")
    code, _, err = run(capsys, "tp", "--jacobi-name", "catalan")
    assert code == 2


def test_series_named(capsys):
    code, out, _ = run(capsys, "series", "--gf", "delannoy", "-n", "4")
    assert code == 0
    assert out.strip() == "1 3 13 63 321"


def test_series_json_spec(capsys):
    spec = json.dumps({"kind": "tied_qp", "s": "3", "t": "2"})
    code, out, _ = run(capsys, "series", "--gf", spec, "-n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["spec"] == {"kind": "tied_qp", "s": "3", "t": "2"}
    assert data["order"] == 3
    assert data["coeffs"] == ["1", "3", "11", "45"]


def test_series_spec_from_file(capsys, tmp_path):
    path = tmp_path / "gf.json"
    path.write_text(json.dumps({"kind": "inverse_sqrt", "s": "2", "t": "1"}))
    code, out, _ = run(capsys, "series", "--gf", f"@{path}", "-n", "4")
    assert code == 0
    assert out.strip() == "1 2 6 20 70"


def test_series_rejects_unknown_name(capsys):
    code, _, err = run(capsys, "series", "--gf", "motzkin")
    assert code == 2
    assert "motzkin" in err


def test_verify_catalog_entry(capsys):
    code, out, _ = run(capsys, "verify", "--name", "catalan", "--depth", "5",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "PASS"
    labels = [c["check"] for c in data["checks"]]
    assert "gf_terms" in labels and "riordan_columns" in labels
    assert all(c["status"] == "PASS" for c in data["checks"])


def test_verify_entry_without_gf(capsys):
    code, out, _ = run(capsys, "verify", "--name", "bell", "--depth", "4",
                       "--format", "json")
    assert code == 0
    labels = [c["check"] for c in json.loads(out)["checks"]]
    assert "gf_terms" not in labels
    assert "riordan_columns" not in labels


def test_verify_accepts_alias(capsys):
    code, out, _ = run(capsys, "verify", "--name", "restricted_hexagonal",
                       "--depth", "4")
    assert code == 0
    assert "verdict: PASS" in out


def test_verify_unknown_name(capsys):
    code, _, err = run(capsys, "verify", "--name", "lucas")
    assert code == 2
    assert "lucas" in err


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    for name in CATALOG:
        assert name in out
    code, out, _ = run(capsys, "catalog", "--format", "json")
    data = json.loads(out)
    assert sorted(e["name"] for e in data) == sorted(CATALOG)
    code, out, _ = run(capsys, "catalog", "--format", "csv")
    assert len(out.splitlines()) == len(CATALOG) + 1
