import csv
import io
import json
from importlib.resources import files

import jsonschema
import pytest

import fibsym.classification as classification
import fibsym.cli as cli
from fibsym.classification import OracleConfidence, classify, sweep
from fibsym.cli import main
from fibsym.report import CSV_HEADER, verdict_from_dict, verdict_to_dict

SCHEMA = json.loads(files("fibsym").joinpath("verdict.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_fibonacci_text(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "fibonacci", "6", "8", "9")
    assert code == 0
    assert "Symmetric" in out and "frobenius   115" in out and "genus       58" in out
    assert "f1, f2      136, 42" in out
    assert "(1-z^42)(1-z^136) / ((1-z^8)(1-z^21)(1-z^34))" in out
    assert "oracle      confirmed" in out


def test_analyze_fibonacci_json(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "fibonacci", "6", "8", "9", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["status"] == "Symmetric"
    assert doc["frobenius"] == "115" and doc["genus"] == "58"
    assert doc["hilbert"]["numerator_exponents"] == ["42", "136"]
    assert doc["closed_form_names"] == ["f1", "f2"]


def test_analyze_lucas_json(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "lucas", "9", "15", "17", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["frobenius"], doc["genus"], doc["lambda"]) == ("35189", "17595", "4")
    assert doc["certificate"]["e2"] == "14284"
    assert doc["closed_form_names"] == ["l1", "l2"]


def test_analyze_raw(capsys):
    code, out, _ = run(capsys, "analyze", "--raw", "4", "6", "10")
    assert code == 0
    assert "NonMinimal" in out
    code, out, _ = run(capsys, "analyze", "--family", "raw", "10", "4", "6", "--format", "json")
    assert json.loads(out)["status"] == "NonMinimal"


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--family", "fibonacci", "1", "2", "3"],
        ["analyze", "--family", "fibonacci", "6", "8"],
        ["analyze", "--family", "lucas", "5", "5", "7"],
        ["analyze", "6", "8", "9"],
        ["analyze", "--raw", "--family", "lucas", "4", "6", "10"],
        ["analyze", "--raw", "x", "6", "10"],
        ["sweep", "--family", "raw", "--max-index", "9"],
        ["sweep", "--family", "fibonacci", "--max-index", "65"],
        ["verify", "--family", "fibonacci", "--max-index", "9", "--conductor-ceiling", "999"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_analyze_internal_inconsistency_exit_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "cross_check", lambda v, c: OracleConfidence.DISAGREES)
    code, _, _ = run(capsys, "analyze", "--family", "fibonacci", "6", "8", "9")
    assert code == 3


def test_no_oracle_flag(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "lucas", "9", "15", "17", "--no-oracle")
    assert code == 0 and "oracle      disabled" in out


def test_sweep_contains_example_row(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "fibonacci", "--max-index", "9", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    row = next(r for r in rows if (r["i1"], r["i2"], r["i3"]) == ("6", "8", "9"))
    assert row["status"] == "Symmetric" and row["frobenius"] == "115" and row["oracle"] == "confirmed"
    assert out.splitlines()[0].split(",") == CSV_HEADER


def test_sweep_empty(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "fibonacci", "--max-index", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [",".join(CSV_HEADER)]


def test_sweep_lucas_symmetric_rows_confirmed(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "lucas", "--max-index", "8", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    for row in doc["rows"]:
        jsonschema.validate(row, SCHEMA)
        if row["status"] == "Symmetric":
            assert row["oracle"] == "confirmed"


def test_csv_and_json_have_same_rows(capsys):
    _, out_csv, _ = run(capsys, "sweep", "--family", "lucas", "--max-index", "11", "--format", "csv")
    _, out_json, _ = run(capsys, "sweep", "--family", "lucas", "--max-index", "11", "--format", "json")
    header_free = list(csv.reader(io.StringIO(out_csv)))[1:]
    doc = json.loads(out_json)

    def key(r):
        c = r["certificate"]
        return (
            r["family"], *map(str, r["indices"]), *r["generators"], r["status"], r["reason"],
            r["lambda"] or "", c["e1"] if c else "", c["e2"] if c else "",
            r["frobenius"] or "", r["genus"] or "", r["oracle"],
        )

    assert sorted(tuple(r) for r in header_free) == sorted(key(r) for r in doc["rows"])
    assert len(header_free) == len(doc["rows"])
    assert doc["summary"]["status"]["Symmetric"] >= 1


def test_json_round_trip_every_field():
    for family, ceiling in (("fibonacci", 12), ("lucas", 12)):
        for row in sweep(family, ceiling, oracle=False):
            doc = json.loads(json.dumps(verdict_to_dict(row.verdict)))
            back = verdict_from_dict(doc)
            assert back == row.verdict
            assert back.attempts == row.verdict.attempts


def test_big_integers_are_strings():
    v = classify("fibonacci", (60, 90, 100))
    doc = verdict_to_dict(v)
    assert all(isinstance(g, str) for g in doc["generators"])
    assert int(doc["generators"][2]) > 2**53
    assert verdict_from_dict(json.loads(json.dumps(doc))) == v


def test_verify_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "--family", "fibonacci", "--max-index", "12")
    assert code == 0 and "0 discrepancies" in out


def test_verify_lucas_includes_9_15_17(capsys):
    code, out, _ = run(capsys, "verify", "--family", "lucas", "--max-index", "17", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["discrepancies"] == []
    row = next(r for r in doc["rows"] if r["indices"] == [9, 15, 17])
    assert row["status"] == "Symmetric" and row["oracle"] == "confirmed"


def test_verify_marks_skipped_rows(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "fibonacci", "--max-index", "12", "--conductor-ceiling", "1000"
    )
    assert code == 0
    assert "skipped" in out


def test_verify_reports_discrepancy_exit_1(capsys, monkeypatch):
    real = classification.cross_check

    def broken(v, ceiling):
        if v.indices == (6, 8, 9):
            return OracleConfidence.DISAGREES
        return real(v, ceiling)

    monkeypatch.setattr(classification, "cross_check", broken)
    code, out, _ = run(capsys, "verify", "--family", "fibonacci", "--max-index", "9")
    assert code == 1
    assert "DISCREPANCY (6, 8, 9)" in out


def test_env_ceiling(capsys, monkeypatch):
    monkeypatch.setenv(cli.CEILING_ENV, "1000")
    code, out, _ = run(capsys, "verify", "--family", "fibonacci", "--max-index", "12")
    assert code == 0 and "skipped" in out
    monkeypatch.setenv(cli.CEILING_ENV, "lots")
    code, _, _ = run(capsys, "verify", "--family", "fibonacci", "--max-index", "5")
    assert code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "analyze", "--family", "fibonacci", "6", "8", "9", "--format", "json", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["frobenius"] == "115"


def test_sweep_workers(capsys):
    code, serial, _ = run(capsys, "sweep", "--family", "lucas", "--max-index", "10", "--format", "csv")
    code2, parallel, _ = run(capsys, "sweep", "--family", "lucas", "--max-index", "10", "--format", "csv", "--workers", "3")
    assert code == code2 == 0 and serial == parallel
