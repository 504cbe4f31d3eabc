import json

from click.testing import CliRunner

from divconv.cli import main

A2_QUOTIENT = '{"level": 14, "exponents": {"1": 2, "2": 2, "7": 2, "14": 2}}'


def run(*args):
    return CliRunner().invoke(main, args)


def test_expand_leading_coefficients(tmp_path):
    result = run("--truncation", "64", "expand", A2_QUOTIENT)
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["coeffs"][:3] == ["0/1", "0/1", "1/1"]


def test_expand_cache_is_byte_identical(tmp_path):
    cache = str(tmp_path / "cache")
    first = run("--truncation", "64", "--cache-dir", cache, "expand", A2_QUOTIENT)
    second = run("--truncation", "64", "--cache-dir", cache, "expand", A2_QUOTIENT)
    assert first.exit_code == 0 and second.exit_code == 0
    assert first.output == second.output
    manifest = json.loads((tmp_path / "cache" / "manifest.json").read_text())
    assert len(manifest) == 1


def test_expand_rejects_bad_congruence():
    result = run("--truncation", "64", "expand", '{"level": 1, "exponents": {"1": 1}}')
    assert result.exit_code == 2


def test_expand_rejects_malformed_json():
    result = run("expand", "{not json")
    assert result.exit_code == 2


def test_ligozat_report():
    result = run("ligozat", '{"level": 14, "exponents": {"1": 5, "2": -1, "7": 5, "14": -1}}')
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["cond_v_prime"] is True and report["weight"] == "4/1"


def test_search_contains_family():
    result = run("--bound", "6", "search", "--level", "14")
    assert result.exit_code == 0
    found = [tuple(sorted((int(d), r) for d, r in q["exponents"].items()))
             for q in json.loads(result.output)]
    assert ((1, 5), (2, -1), (7, 5), (14, -1)) in found


def test_basis_output():
    result = run("--truncation", "64", "basis", "--level", "14")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert [e["id"] for e in data["elements"]] == [
        "E1", "E2", "E7", "E14", "S14.1", "S14.2", "S14.3", "S14.4",
    ]
    assert all(len(e["coeffs"]) == 20 for e in data["elements"])


def test_derive_formula_json():
    result = run("--truncation", "64", "derive", "--alpha", "2", "--beta", "7")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["sigma3"]["1"] == "1/600"
    assert data["cusp"][1] == ["S14.2", "-1/4200"]


def test_derive_rejects_bad_pair():
    assert run("derive", "--alpha", "7", "--beta", "2").exit_code == 2


def test_verify_clean_run():
    result = run("--truncation", "64", "verify", "--alpha", "2", "--beta", "7", "--nmax", "64")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["checked"] == 64 and data["mismatches"] == []


def test_verify_nmax_above_truncation_is_input_error():
    result = run("--truncation", "64", "verify", "--alpha", "2", "--beta", "7", "--nmax", "100")
    assert result.exit_code == 2


def test_rep_csv():
    result = run("rep", "--a", "1", "--b", "1", "--nmax", "4")
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "n,formula_value,oracle_value,match"
    assert lines[2].startswith("2,112,112,true")


def test_rep_unsupported_pair():
    assert run("rep", "--a", "1", "--b", "5", "--nmax", "3").exit_code == 2


def test_table_csv():
    result = run("--truncation", "64", "table", "--pairs", "2,7")
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "alpha,beta,term,coefficient"
    assert "2,7,sigma3(n/1),1/600" in lines
    assert "2,7,cusp.S14.4,-1/42" in lines


def test_truncation_floor_is_enforced():
    assert run("--truncation", "32", "basis", "--level", "14").exit_code == 2


def test_outputs_are_deterministic():
    a = run("--truncation", "64", "derive", "--alpha", "2", "--beta", "7")
    b = run("--truncation", "64", "derive", "--alpha", "2", "--beta", "7")
    assert a.output == b.output
