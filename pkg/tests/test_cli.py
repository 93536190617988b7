import io
import json

import pytest

from extrinsic_lie.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_admissible():
    assert call("admissible", "E6") == (0, "1 6\n")
    assert call("admissible", "E8") == (0, "\n")
    assert call("admissible", "C5") == (0, "5\n")


@pytest.mark.parametrize("argv", [
    ("admissible", "Q4"),
    ("admissible", "A2xA2"),
    ("surgery", "E8", "1"),
    ("surgery", "E7", "9"),
    ("weights", "A2", "1"),
    ("realize", "e6-27"),
    ("realize", "wedge2", "3"),
    ("verify", "nothing"),
    ("frobnicate",),
])
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_surgery_json():
    code, out = call("surgery", "E7", "7", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["N"] == 26 and len(data["weights"]) == 27
    assert data["census"] == [1, 16, 10] and data["catalog_row"] == "e6-27"


def test_surgery_table():
    code, out = call("surgery", "C4", "4")
    assert code == 0
    assert "catalog row  sym2(3)" in out
    assert out.count("  V2  ") == 6


def test_surgery_degenerate_row():
    code, out = call("surgery", "A3", "1")
    assert code == 0 and "none (V2 is empty)" in out


def test_weights():
    code, out = call("weights", "G2", "1", "0")
    assert code == 0 and out.startswith("dimension 7")
    code, out = call("weights", "A2", "1", "1", "--json")
    data = json.loads(out)
    assert data["dimension"] == 8
    assert {"labels": [0, 0], "multiplicity": 2} in data["weights"]


def test_weights_cap():
    code, _ = call("weights", "A3", "2", "2", "2", "--cap", "5")
    assert code == 1


def test_catalog_list():
    code, out = call("catalog", "list", "--json")
    assert code == 0 and len(json.loads(out)) == 6
    code, out = call("catalog", "list")
    assert code == 0 and "halfspin" in out


def test_realize_and_check():
    code, out = call("realize", "sym2", "1")
    assert code == 0 and "blocks (1, 1, 1)" in out
    code, out = call("realize", "tensor", "1", "1", "--check", "--samples", "20")
    assert code == 0
    assert "FAIL" not in out and "FINDING" in out
    code, out = call("realize", "standard", "4", "--json")
    assert json.loads(out)["blocks"] == [1, 3, 1]


@pytest.mark.parametrize("suite", ["e6", "counts", "signatures", "bijection", "admissible", "halfspin", "pairing"])
def test_verify_suites(suite):
    code, out = call("verify", suite)
    assert code == 0
    assert out.splitlines()[-1].startswith(f"{suite}: ")
    assert " 0 fail" in out.splitlines()[-1]


def test_verify_json_and_findings_do_not_fail():
    code, out = call("verify", "signatures", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["fail"] == 0 and data["summary"]["finding"] > 0


def test_output_is_deterministic():
    assert call("surgery", "E6", "1", "--json") == call("surgery", "E6", "1", "--json")
    assert call("verify", "signatures") == call("verify", "signatures")
