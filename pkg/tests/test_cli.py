import csv
import io
import json

import pytest

from universes.cli import EXIT_CAP, EXIT_OK, EXIT_ORACLE, EXIT_USAGE, main
from universes.simulate import table1_scenario


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_verify_counts_two_one():
    code, text = run("verify-counts", "--m", "2", "--n", "1")
    r = json.loads(text)
    assert code == EXIT_OK
    assert (r["total_patterns"], r["feasible_observed"], r["classes_observed"]) == (16, 12, 9)
    assert r["theorem1_match"] and r["corollary1_match"]


def test_verify_counts_mismatch_still_exits_zero():
    code, text = run("verify-counts", "--m", "3", "--n", "1")
    assert code == EXIT_OK
    assert json.loads(text)["theorem1_match"] is False


def test_verify_counts_cap(capsys):
    code, text = run("--cap", "8", "verify-counts", "--m", "3", "--n", "1")
    assert code == EXIT_CAP
    assert "cap exceeded" in capsys.readouterr().err
    assert json.loads(text)["skipped"]


def test_verify_counts_oracle_disagreement(monkeypatch):
    import universes.enumeration as en

    monkeypatch.setattr(en, "feasible_count_oracle_partitions", lambda s: -1)
    code, _ = run("verify-counts", "--m", "2", "--n", "1")
    assert code == EXIT_ORACLE


def test_classify():
    assert run("classify", "--pattern", "1111", "--order", "paper") == (EXIT_OK, "maya\n")
    assert run("classify", "--pattern", "1001") == (EXIT_OK, "personal_universe\n")
    assert run("classify", "--pattern", "0100")[0] == EXIT_USAGE


def test_classify_labels(tmp_path):
    f = tmp_path / "u.json"
    f.write_text(json.dumps({"shape": {"m": 2, "n": 2, "observable": [0]},
                             "labels": {"sensation": [[0], [0]], "communication": [0, 0]}}))
    code, text = run("classify", "--labels", str(f), "--dogmatic")
    assert code == EXIT_OK
    assert json.loads(text) == {"classes": {"metaphysical_realist": 1},
                                "tags": ["super_real", "dogmatic_variant"]}


def test_canonical():
    code, text = run("canonical", "--pattern", "0110", "--order", "paper")
    assert code == EXIT_OK
    assert text.splitlines()[0] == "0011"
    code, text = run("canonical", "--pattern", "0110", "--format", "json")
    assert json.loads(text) == {"canonical": "0011", "order": "paper", "orbit": ["0011", "0110"]}


def test_enumerate_csv_and_json():
    code, text = run("enumerate", "--m", "2", "--n", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == EXIT_OK and len(rows) == 16
    assert sum(r["feasible"] == "True" for r in rows) == 12
    code, text = run("enumerate", "--m", "2", "--n", "1", "--feasible-only")
    lines = [json.loads(x) for x in text.splitlines()]
    assert len(lines) == 12 and all(x["order"] == "paper" for x in lines)
    assert "0100" not in {x["pattern"] for x in lines}


def test_enumerate_cap():
    assert run("enumerate", "--m", "3", "--n", "3")[0] == EXIT_CAP


def test_classes():
    code, text = run("classes", "--m", "2", "--n", "1")
    recs = [json.loads(x) for x in text.splitlines()]
    assert len(recs) == 9
    assert {r["canonical"]: r["name"] for r in recs}["0111"] == "synaesthetic"
    code, text = run("classes", "--m", "3", "--n", "1", "--format", "csv")
    assert len(text.splitlines()) == 34


def test_simulate(tmp_path):
    f = tmp_path / "scenario.json"
    f.write_text(json.dumps(table1_scenario()))
    code, text = run("simulate", "--scenario", str(f))
    out = json.loads(text)
    assert code == EXIT_OK
    assert out["verdict"] == "personal_universe_consistent"
    assert all(s["agree"] for s in out["transcript"]["steps"])


def test_export_dot(tmp_path):
    out = tmp_path / "u.dot"
    assert run("export-dot", "--pattern", "1001", "--out", str(out))[0] == EXIT_OK
    assert out.read_text().startswith("digraph")
    assert run("export-dot", "--pattern", "0100", "--out", str(out))[0] == EXIT_USAGE
    doc = tmp_path / "u.json"
    doc.write_text(json.dumps({"shape": {"m": 1, "n": 1},
                               "labels": {"sensation": [[0]], "communication": [1]}}))
    assert run("export-dot", "--labels", str(doc), "--out", str(out))[0] == EXIT_OK
    assert out.read_text().count("->") == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["enumerate", "--m", "x"])
    assert e.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == EXIT_USAGE
