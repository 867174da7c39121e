"""CLI tests: exit codes, report shape against the shipped JSON schema,
CSV output, and byte-level determinism across worker counts."""

import json
from importlib import resources

import jsonschema
import pytest

from mseqcorr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def schema():
    text = resources.files("mseqcorr.schemas").joinpath("spectrum_report.schema.json").read_text()
    return json.loads(text)


def test_field_info(capsys):
    code, out, _ = run(capsys, "field", "info", "--p", "3", "--n", "2")
    body = json.loads(out)
    assert code == 0
    assert body["order"] == 9 and body["primitive"]


def test_spectrum_json_schema(capsys, schema):
    code, out, _ = run(capsys, "spectrum", "--p", "2", "--n", "4", "--d", "7")
    assert code == 0
    body = json.loads(out)
    jsonschema.validate(body, schema)
    assert body["family"] == "binary-2lm"
    assert sum(e["count"] for e in body["distribution"]) == 16
    assert body["moments"]["status"]["m1"] == "pass"


def test_spectrum_schema_irrational_values(capsys, schema):
    # gcd(d, q-1) > 1 gives genuinely irrational spectrum values
    code, out, _ = run(capsys, "spectrum", "--p", "3", "--n", "2", "--d", "2")
    assert code == 0
    body = json.loads(out)
    jsonschema.validate(body, schema)
    assert any("rational" not in e["value"] for e in body["distribution"])


def test_spectrum_exclude_zero_omits_moments(capsys):
    code, out, _ = run(capsys, "spectrum", "--p", "3", "--n", "2", "--d", "5", "--exclude-zero")
    body = json.loads(out)
    assert code == 0
    assert "moments" not in body
    assert sum(e["count"] for e in body["distribution"]) == 8


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--p", "2", "--n", "4", "--d", "7", "--out", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "rational,coords,count"
    assert len(lines) == 5  # header + 4 distinct values
    assert sum(int(l.split(",")[-1]) for l in lines[1:]) == 16


def test_verify_ternary_pass(capsys):
    code, out, _ = run(capsys, "verify", "ternary", "--r", "2")
    assert code == 0
    body = json.loads(out)
    assert body["match"] and not body["conjecture_mode"]


def test_verify_binary_pass(capsys):
    code, out, _ = run(capsys, "verify", "binary", "--l", "2", "--m", "1", "--s", "1")
    assert code == 0
    body = json.loads(out)
    assert body["zero_attained"] and body["l2_structure"]["u"] == 3


def test_verify_binary_invalid_params_exit2(capsys):
    code, _, err = run(capsys, "verify", "binary", "--l", "2", "--m", "1", "--s", "2")
    assert code == 2
    assert "invalid parameters" in err and "gcd" in err


def test_verify_moments(capsys):
    code, out, _ = run(capsys, "verify", "moments", "--p", "3", "--n", "3", "--d", "5")
    assert code == 0
    assert json.loads(out)["status"]["m2_abs"] == "pass"


def test_gauss(capsys):
    code, out, _ = run(capsys, "gauss", "--p", "3", "--s", "2")
    assert code == 0
    assert json.loads(out)["match_exact"]


def test_b3(capsys):
    code, out, _ = run(capsys, "b3", "--p", "3", "--n", "3", "--d", "5")
    assert code == 0
    assert json.loads(out)["b3"] == 3


def test_usage_errors_exit2(capsys):
    assert run(capsys, "field", "info", "--p", "4", "--n", "2")[0] == 2
    assert run(capsys, "spectrum", "--p", "2", "--n", "3", "--d", "7")[0] == 2  # d = q - 1
    assert run(capsys, "field", "info", "--p", "3", "--n", "2", "--poly", "x^2+1")[0] == 2
    assert run(capsys, "verify", "ternary", "--r", "0")[0] == 2


def test_custom_poly_changes_encoding_not_spectrum(capsys):
    # a different primitive polynomial permutes encodings but the value
    # distribution is representation-independent
    _, out1, _ = run(capsys, "spectrum", "--p", "3", "--n", "2", "--d", "5")
    _, out2, _ = run(capsys, "spectrum", "--p", "3", "--n", "2", "--d", "5", "--poly", "2,2,1")
    d1, d2 = json.loads(out1), json.loads(out2)
    assert d1["poly"] != d2["poly"]
    assert d1["distribution"] == d2["distribution"]


def test_reports_byte_identical_across_workers(tmp_path, capsys):
    paths = []
    for w in ("1", "2", "8"):
        p = tmp_path / f"w{w}.json"
        code = main(
            ["spectrum", "--p", "3", "--n", "4", "--d", "7", "--method", "naive",
             "--workers", w, "--path", str(p)]
        )
        capsys.readouterr()
        assert code == 0
        paths.append(p)
    blobs = [p.read_bytes() for p in paths]
    assert blobs[0] == blobs[1] == blobs[2]


def test_workers_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("MSEQCORR_WORKERS", "4")
    p = tmp_path / "env.json"
    assert main(["spectrum", "--p", "3", "--n", "4", "--d", "7", "--method", "naive",
                 "--path", str(p)]) == 0
    capsys.readouterr()
    q = tmp_path / "one.json"
    monkeypatch.delenv("MSEQCORR_WORKERS")
    assert main(["spectrum", "--p", "3", "--n", "4", "--d", "7", "--method", "naive",
                 "--path", str(q)]) == 0
    capsys.readouterr()
    assert p.read_bytes() == q.read_bytes()


def test_suite_help_exists(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["suite", "--help"])
    capsys.readouterr()
    assert exc.value.code == 0
