import json
from importlib import resources

import jsonschema
import pytest

from pin2fill.catalog import builtin, dumps
from pin2fill.cli import main

SCHEMA = json.loads(resources.files("pin2fill").joinpath("report_schema.json").read_text(encoding="utf-8"))

JSON_INVOCATIONS = [
    ["obstruct", "--type", "II", "--h", "-1"],
    ["obstruct", "--type", "I", "--h", "-1/8", "--C", "-3"],
    ["obstruct", "--contact-d", "0", "--tower", "gamma"],
    ["obstruct", "--contact-d", "0", "--tower", "alpha", "--C", "0"],
    ["obstruct", "--type", "I", "--h", "1/3"],
    ["catalog", "list"],
    ["catalog", "show", "Sigma(2,3,11)"],
    ["catalog", "run", "M(-5)"],
    ["catalog", "run", "Sigma(2,11,23)", "--C", "-20"],
    ["catalog", "show", "nope"],
    ["gysin", "--model", "s3", "--window", "-9:-1"],
    ["gysin", "--model", "rank-one", "--type", "II", "--h", "1/2", "--window", "-20:2"],
    ["gysin", "--model", "y4k1", "--k", "1", "--window", "-4:10"],
    ["cobmap", "--b2plus", "3", "--b2minus", "0"],
    ["cobmap", "--b2plus", "1", "--b2minus", "9"],
    ["lattice", "--b2plus", "2", "--b2minus", "10"],
    ["lattice", "--b2plus", "1", "--b2minus", "2"],
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out), out


@pytest.mark.parametrize("argv", JSON_INVOCATIONS, ids=lambda a: " ".join(a))
def test_json_validates_and_is_deterministic(capsys, argv):
    code, report, raw = run_json(capsys, *argv)
    jsonschema.validate(report, SCHEMA)
    assert run_json(capsys, *argv)[2] == raw
    assert raw == json.dumps(report, sort_keys=True, ensure_ascii=False) + "\n"


def test_obstruct_examples(capsys):
    code, r, _ = run_json(capsys, "obstruct", "--type", "II", "--h", "-1")
    assert code == 0
    v = r["verdict"]
    assert (v["b2plus"], v["b2minus"], v["lattice"]["name"]) == (2, 18, "2H⊕2E8")
    code, r, _ = run_json(capsys, "obstruct", "--contact-d", "0", "--tower", "gamma")
    assert (r["verdict"]["b2plus"], r["verdict"]["b2minus"], r["verdict"]["lattice"]["name"]) == (2, 10, "2H⊕E8")
    code, r, _ = run_json(capsys, "obstruct", "--contact-d", "0", "--tower", "alpha")
    assert code == 0 and r["verdict"]["scope"] == "negative-definite-only"
    assert r["verdict"]["b2plus"] is None


def test_obstruct_euler(capsys):
    code, r, _ = run_json(capsys, "obstruct", "--type", "I", "--h", "0", "--C", "-20")
    assert r["euler"] == {"C": "-20", "chi_indefinite": 11, "chi_negdef_max": 23, "finite": True,
                          "negdef_possible": True}


@pytest.mark.parametrize("argv", [
    ["obstruct"],
    ["obstruct", "--type", "I", "--h", "0", "--contact-d", "0", "--tower", "beta"],
    ["obstruct", "--type", "I"],
    ["obstruct", "--contact-d", "1"],
    ["obstruct", "--type", "III", "--h", "0"],
    ["obstruct", "--type", "I", "--h", "zero"],
    ["gysin", "--model", "s3", "--window", "5"],
    ["gysin", "--model", "s3", "--window", "-3:-1"],
    ["gysin", "--model", "rank-one", "--window", "-20:2"],
    ["gysin", "--model", "y4k1", "--k", "0", "--window", "-4:20"],
    ["cobmap", "--b2plus", "-1", "--b2minus", "0"],
    ["nosuchcommand"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 64
    assert "Error" in err


def test_hypothesis_errors(capsys):
    code, _, err = run(capsys, "obstruct", "--type", "I", "--h", "1/3")
    assert code == 2 and "inconsistent h" in err
    code, _, err = run(capsys, "lattice", "--b2plus", "1", "--b2minus", "2")
    assert code == 2 and "not divisible by 8" in err
    code, _, err = run(capsys, "lattice", "--b2plus", "0", "--b2minus", "8")
    assert code == 2 and "inapplicable" in err


def test_catalog(capsys):
    code, r, _ = run_json(capsys, "catalog", "show", "Sigma(2,3,11)")
    assert code == 0 and r["entries"][0]["h"] == "-1" and r["entries"][0]["type"] == "II"
    code, r, _ = run_json(capsys, "catalog", "run", "M(-5)")
    assert (r["verdict"]["b2plus"], r["verdict"]["b2minus"]) == (1, 5)
    code, out, _ = run(capsys, "catalog", "run", "-Sigma(2,3,7)")
    assert code == 0 and "lattice: H⊕E8" in out
    assert run(capsys, "catalog", "run", "nope")[0] == 3
    code, r, _ = run_json(capsys, "catalog", "list")
    assert len(r["entries"]) == len(builtin())


def test_catalog_file_and_env(capsys, tmp_path, monkeypatch):
    from pin2fill.catalog import ManifoldEntry
    from pin2fill.floer import TypeClass

    path = tmp_path / "extra.json"
    path.write_text(dumps([ManifoldEntry("Mine", 1, 1, TypeClass.II), ManifoldEntry("Bare", 0)]))
    code, out, _ = run(capsys, "catalog", "--file", str(path), "run", "Mine")
    assert code == 0 and "b2+ = 2, b2- = 2" in out
    monkeypatch.setenv("PIN2FILL_CATALOG", str(path))
    assert run(capsys, "catalog", "show", "Mine")[0] == 0
    assert run(capsys, "catalog", "run", "Bare")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema_version": 1, "entries": [{"name": 1}]}')
    code, _, err = run(capsys, "catalog", "--file", str(bad), "list")
    assert code == 64 and "bad.json:1" in err


def test_gysin_reports(capsys):
    code, r, _ = run_json(capsys, "gysin", "--model", "rank-one", "--type", "I", "--h", "0", "--window", "-16:2")
    assert code == 0 and r["verification"]["ok"]
    assert r["table"][2] == {"grading": "0", "hs": 1, "hm": 1}
    code, r, _ = run_json(capsys, "gysin", "--model", "y4k1", "--k", "1", "--window", "-4:10")
    assert [row["hm"] for row in r["table"] if row["grading"] in ("0", "2", "4", "6")] == [1, 2, 2, 2]


def test_gysin_failure_exit(capsys, monkeypatch):
    import pin2fill.cli as cli
    from pin2fill.floer import corrupt

    real = cli.build_s3
    monkeypatch.setattr(cli, "build_s3", lambda w: corrupt(real(w), -10))
    code, out, _ = run(capsys, "gysin", "--model", "s3", "--window", "-30:-1")
    assert code == 2 and "FAILED exact(pi,q) at -10" in out


def test_cobmap_and_lattice(capsys):
    code, r, _ = run_json(capsys, "cobmap", "--b2plus", "3", "--b2minus", "0")
    assert r["bar_map"]["kind"] == "zero"
    code, r, _ = run_json(capsys, "cobmap", "--b2plus", "1", "--b2minus", "9")
    assert r["bar_map"] == {"kind": "mono", "qpow": 1, "degree": "1"}
    code, r, _ = run_json(capsys, "lattice", "--b2plus", "2", "--b2minus", "10")
    assert r["lattice"]["name"] == "2H⊕E8" and r["invariants"]["det"] == 1


def test_help(capsys):
    assert run(capsys, "--help")[0] == 0
