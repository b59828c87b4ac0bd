import json

import pytest

from padic_serre.casefile import (
    CaseFile,
    GOLDEN,
    bundled_case_names,
    load_bundled_case,
    report_to_json,
    verify_case,
)
from padic_serre.cli import main
from padic_serre.errors import SchemaError


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_polygon_command(tmp_path, capsys):
    poly = _write(tmp_path, "f.json", ["-2", "0", "0", "1"])
    assert main(["polygon", poly, "--p", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["segments"] == [{"slope": "1/3", "multiplicity": 3}]


def test_polygon_on_bundled_sextic(tmp_path, capsys):
    case = load_bundled_case("2-3-55")
    shifted = case.sextic.shift(1)
    poly = _write(tmp_path, "t.json", shifted.to_json())
    assert main(["polygon", poly, "--p", "2"]) == 0
    json.loads(capsys.readouterr().out)


def test_polygon_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    assert main(["polygon", str(bad), "--p", "2"]) == 2


def test_precision_command(tmp_path, capsys):
    poly = _write(tmp_path, "f.json", ["-2", "0", "0", "1"])
    assert main(["precision", poly, "--p", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["d"] == "2" and out["a"] == "1"
    assert out["bound_prop1bis"] == "2/3" and out["k_prop1bis"] == 1
    poly2 = _write(tmp_path, "g.json", ["-2", "0", "1"])
    assert main(["precision", poly2, "--p", "2", "--method", "prop1bis"]) == 0
    assert json.loads(capsys.readouterr().out)["k_prop1bis"] == 3


def test_precision_rejects_non_monic(tmp_path, capsys):
    poly = _write(tmp_path, "f.json", ["-2", "0", "0", "2"])
    assert main(["precision", poly, "--p", "2"]) == 3


def test_certify_command(tmp_path, capsys):
    f = _write(tmp_path, "f.json", ["-2", "0", "0", "1"])
    g = _write(tmp_path, "g.json", ["-2", "2", "0", "1"])
    rc = main(["certify", f, g, "--p", "2",
               "--evidence-f", "eisenstein-after-shift:0",
               "--evidence-g", "eisenstein-after-shift:0"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "certified"


def test_certify_caveat_pair_rejected(tmp_path, capsys):
    f = _write(tmp_path, "f.json", ["-2", "0", "0", "1"])
    g = _write(tmp_path, "g.json", ["0", "0", "0", "1"])
    rc = main(["certify", f, g, "--p", "2",
               "--evidence-f", "eisenstein-after-shift:0",
               "--evidence-g", "eisenstein-after-shift:0"])
    assert rc == 3
    assert "g" in capsys.readouterr().err


def test_certify_under_precision_inconclusive(tmp_path, capsys):
    f = _write(tmp_path, "f.json", ["-2", "0", "1"])
    g = _write(tmp_path, "g.json", ["2", "0", "1"])
    rc = main(["certify", f, g, "--p", "2", "--method", "prop1bis",
               "--evidence-f", "eisenstein-after-shift:0",
               "--evidence-g", "eisenstein-after-shift:0"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "inconclusive"


def test_level_command(tmp_path, capsys):
    data = _write(tmp_path, "lvl.json", {
        "level_data": [{"q": 2, "filtration":
                        [{"order": 12, "fixed_dim": 0}] + [{"order": 4, "fixed_dim": 0}] * 5}]
    })
    assert main(["level", data]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"exponents": {"2": 8}, "N": "256"}


def test_weights_command(tmp_path, capsys):
    profile = _write(tmp_path, "prof.json",
                     {"niveau": 1, "triples": [[0, 0, 0]], "flags": ["none", "none"]})
    assert main(["weights", profile, "--p", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["weights"] == [[6, 3, 0]] and out["printed"] == ["(6,3,0)"]


def test_frobenius_command(capsys):
    assert main(["frobenius", "5-17-1", "--ell-max", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    ells = [e["ell"] for e in out["frobenius"]]
    assert ells == [2, 3]
    frob2 = out["frobenius"][0]
    assert frob2["class"] == "15bd"


def test_verify_case_all_golden(capsys):
    for name in GOLDEN:
        assert main(["verify-case", name]) == 0, name
        report = json.loads(capsys.readouterr().out)
        assert report["golden"]["checked"] and not report["golden"]["mismatches"]


def test_verify_case_data_only(capsys):
    for name in bundled_case_names()[6:]:
        assert main(["verify-case", name]) == 0
        capsys.readouterr()


def test_reports_are_byte_identical(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify-case", "5-17-1", "--json-out", str(out1)]) == 0
    assert main(["verify-case", "5-17-1", "--json-out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    report = verify_case(load_bundled_case("5-17-1"))
    assert report_to_json(report).encode() == out1.read_bytes()


def test_golden_mismatch_exit_code(tmp_path, capsys):
    case = load_bundled_case("3-13-9")
    payload = dict(case.raw)
    payload["expected"] = dict(payload["expected"], level={"13": 1})
    path = _write(tmp_path, "tampered.json", payload)
    assert main(["verify-case", path]) == 1


def test_schema_error_exit_code(tmp_path):
    path = _write(tmp_path, "incomplete.json", {"name": "x", "sextic": ["1", "1"]})
    assert main(["verify-case", path]) == 2


def test_inconsistent_case_exit_code(tmp_path):
    case = load_bundled_case("3-13-9")
    payload = dict(case.raw)
    rows = [dict(r) for r in payload["frobenius_inputs"]]
    rows[0]["cycle_type"] = [6]
    payload["frobenius_inputs"] = rows
    path = _write(tmp_path, "inconsistent.json", payload)
    assert main(["verify-case", path]) == 3


def test_bundled_expected_blocks_cite_sources():
    for name in GOLDEN:
        case = load_bundled_case(name)
        assert case.expected.get("source")


def test_unknown_bundled_case():
    with pytest.raises(SchemaError):
        load_bundled_case("9-9-9")
