import csv
import io
import json
from pathlib import Path

import jsonschema

from monocurve.cli import curve_record, main

with open(Path(__file__).resolve().parent.parent
          / "docs" / "curve_record.schema.json") as fh:
    SCHEMA = json.load(fh)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_apery_command(capsys):
    code, out, _ = run(capsys, "apery", "3", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "i,omega,deg"
    assert lines[1] == "0,0,0"
    assert lines[4] == "3,3,1"

    code, out, _ = run(capsys, "apery", "3", "5", "--format", "json")
    data = json.loads(out)
    assert data["omega"] == [0, 6, 12, 3, 9]


def test_frobenius_and_degree_commands(capsys):
    code, out, _ = run(capsys, "frobenius", "3", "5")
    assert code == 0 and out.strip() == "7"
    code, out, _ = run(capsys, "degree", "3", "5", "--n", "8")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "degree", "5", "11", "12", "--n", "18")
    assert code == 0 and out.strip() == "NOT_IN_SEMIGROUP"


def test_input_errors_exit_2(capsys):
    code, _, err = run(capsys, "frobenius", "4", "6")
    assert code == 2 and "coprime" in err
    code, _, err = run(capsys, "frobenius", "x", "5")
    assert code == 2


def test_invariants_json_schema(capsys):
    code, out, _ = run(capsys, "invariants", "5", "9", "11", "20",
                       "--format", "json", "--sigma", "--verify")
    assert code == 0
    rec = json.loads(out)
    jsonschema.validate(rec, SCHEMA)
    assert rec["I"] == [4] and not rec["cm"] and rec["buchsbaum"]
    assert (rec["a1"], rec["a2"], rec["reg"], rec["ellH1"]) == (3, 3, 5, 1)
    assert rec["verified"]["status"] == "ok"

    code, out, _ = run(capsys, "invariants", "1", "2", "3", "--format", "json")
    rec = json.loads(out)
    jsonschema.validate(rec, SCHEMA)
    assert rec["cm"] and rec["reg"] == 1 and rec["a1"] is None

    code, out, _ = run(capsys, "invariants", "12", "17", "20", "29",
                       "--format", "json")
    rec = json.loads(out)
    assert rec["I"] == [19]
    assert (rec["ellH1"], rec["a1"], rec["a2"], rec["reg"]) == (1, 3, 4, 6)


def test_invariants_round_trip(capsys):
    rec = curve_record((5, 9, 11, 20), sigma_method="formula")
    assert json.loads(json.dumps(rec)) == rec


def test_tables(capsys):
    for which in ("1", "2", "3"):
        code, out, _ = run(capsys, "table", which)
        assert code == 0, out


def test_sigma_command(capsys):
    code, out, _ = run(capsys, "sigma", "1", "3", "11", "13",
                       "--method", "both", "--format", "json")
    assert code == 0
    assert json.loads(out)["sigma"] == 5
    # brute path exceeding the cap falls back to the formula with a flag
    code, out, _ = run(capsys, "sigma", "3", "50", "101",
                       "--method", "brute", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data.get("capExceeded") and data["method"] == "formula"


def test_batch(tmp_path, capsys):
    f = tmp_path / "curves.txt"
    f.write_text("5 9 11 20\n# a comment\n1,3,4,8,10\n\n12 17 20 29\n")
    code, out, _ = run(capsys, "batch", "--input", str(f), "--format", "json")
    assert code == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert [r["gens"] for r in recs] == [[5, 9, 11, 20], [1, 3, 4, 8, 10],
                                         [12, 17, 20, 29]]

    # parallel output is identical and in input order
    code2, out2, _ = run(capsys, "batch", "--input", str(f),
                         "--format", "json", "--jobs", "3")
    assert code2 == 0 and out2 == out


def test_batch_csv_header(tmp_path, capsys):
    f = tmp_path / "curves.txt"
    f.write_text("3 5\n")
    code, out, _ = run(capsys, "batch", "--input", str(f), "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["gens", "d", "k", "gaps", "lambdaMax", "lambdaSl",
                       "I", "cm", "buchsbaum", "a1", "a2", "reg", "regCurve",
                       "ellH1", "sigma", "verified"]


def test_batch_bad_line_exit_2(tmp_path, capsys):
    f = tmp_path / "curves.txt"
    f.write_text("3 5\n4 6\n")
    code, out, err = run(capsys, "batch", "--input", str(f), "--format", "json")
    assert code == 2
    assert "line 2" in err
    # the good line is still emitted
    assert len(out.strip().splitlines()) == 1

    code, _, _ = run(capsys, "batch", "--input", "/nonexistent")
    assert code == 2


def test_pretty_format(capsys):
    code, out, _ = run(capsys, "invariants", "5", "9", "11", "20")
    assert code == 0
    assert "reg = 5" in out
