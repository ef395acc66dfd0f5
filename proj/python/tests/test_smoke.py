import json
import pathlib

import pytest

import gmconn

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def read(name):
    return (DATA / name).read_text()


def test_canonical_form():
    assert gmconn.canonical("l1*l2/l2 + 0", 2) == "l1"
    assert gmconn.canonical("(l1^2 - l2^2)/(l1 - l2)", 2) == "l1 + l2"


def test_analyze_four_lines():
    info = gmconn.analyze(read("four_lines.json"))
    assert info["n"] == 4 and info["ell"] == 2
    assert info["betanbc"] == [[2, 4], [3, 4]]
    assert abs(info["euler"]) == len(info["betanbc"])


def test_omega_general_345():
    m = gmconn.omega_general([3, 4, 5], 4, 2)
    assert m["rows"] == [[2, 3], [2, 4], [3, 4]]
    assert m["entries"][2] == ["0", "0", "-l1 - l2"]


def test_connection_selberg():
    c = gmconn.connection(read("selberg_path.json"))
    assert c["multiplicities"]["345"] == 2
    assert sum(c["multiplicities"].values()) == 8
    assert c["omega"]["entries"] == [["l3 + l4 + l5", "0"], ["0", "l3 + l4 + l5"]]


def test_projection_bases_agree_for_four_lines():
    text = read("four_lines.json")
    assert gmconn.projection(text, "zeta") == gmconn.projection(text, "eta")


def test_invalid_path_raises():
    with pytest.raises(gmconn.InvalidInput, match="vanishes identically"):
        gmconn.multiplicities(read("invalid/vanishing_minor.json"))
    with pytest.raises(gmconn.ParseError):
        gmconn.analyze("{not json")


def test_verify_suite_passes():
    checks = gmconn.verify(jobs=2)
    assert len(checks) >= 20
    assert all(passed for _, passed, _ in checks)


def test_run_cli_json():
    code, out, _ = gmconn.run_cli(["omega-general", "--n", "4", "--ell", "2", "--J", "2,3,4", "--format", "json"])
    assert code == 0
    assert json.loads(out)["entries"][1] == ["-l4", "l3", "-l2"]
    code, out, _ = gmconn.run_cli(["--format", "json", "multiplicity", str(DATA / "invalid/wrong_endpoint.json")])
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "invalid_input"
