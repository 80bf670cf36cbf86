import io
import json

import pytest

from seqcert.certifier import Certificate
from seqcert.cli import main


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_text():
    code, out = run_cli("analyze", "--sequence=-++++")
    assert code == 0
    assert "d = 1" in out
    assert "support parameters: (5, 4, 3)" in out


def test_analyze_n13():
    code, out = run_cli("analyze", "--sequence=+++++--++-+-+")
    assert code == 0
    assert "d = 1" in out and "(13, 9, 6)" in out


def test_analyze_period_two():
    code, out = run_cli("analyze", "--sequence=-+")
    assert code == 0 and "d = -2" in out


def test_analyze_rejects_bad_characters():
    code, _ = run_cli("analyze", "--sequence=+-x")
    assert code == 1
    code, _ = run_cli("analyze")
    assert code == 1


def test_analyze_file(tmp_path):
    path = tmp_path / "seqs.txt"
    path.write_text("-++++\n-+\n")
    code, out = run_cli("analyze", "--file", str(path), "--format", "json")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert [obj["d"] for obj in lines] == ["1", "-2"]


def test_certify_text_and_json():
    code, out = run_cli("certify", "--n", "12546", "--d", "2")
    assert code == 0 and "DSC" in out
    code, out = run_cli("certify", "--n", "40", "--d", "4", "--format", "json")
    assert code == 0
    cert = Certificate.from_json(out)
    assert cert.verdict == "exists"


def test_certify_with_k_lambda():
    code, out = run_cli("certify", "--n", "25", "--k", "9", "--lambda", "3",
                        "--format", "json")
    assert code == 0
    assert Certificate.from_json(out).verdict == "nonexistent"


def test_certify_usage_errors():
    code, _ = run_cli("certify", "--n", "25")
    assert code == 1
    code, _ = run_cli("certify", "--n", "25", "--d", "1", "--k", "9")
    assert code == 1


def test_certify_all_rules():
    code, out = run_cli("certify", "--n", "12546", "--d", "2",
                        "--all-rules", "--format", "json")
    assert code == 0
    assert len(out.strip().splitlines()) >= 3


def test_scan_family2_json():
    code, out = run_cli("scan", "--family", "2", "--max-i", "5",
                        "--format", "json")
    assert code == 0
    certs = [Certificate.from_json(line) for line in out.strip().splitlines()]
    assert [c.params.n for c in certs] == [6, 66, 902, 12546, 174726]
    assert certs[0].verdict == "exists"
    assert certs[3].rule == "DSC"


def test_scan_needs_bound():
    code, _ = run_cli("scan", "--family", "2")
    assert code == 1


def test_enumerate_family0():
    code, out = run_cli("enumerate", "--family", "0", "--max-i", "3")
    assert code == 0
    assert "260" in out and "112" in out


def test_search_by_nd():
    code, out = run_cli("search", "--n", "25", "--d", "1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["sequences"] == [] and obj["complete"]
    code, out = run_cli("search", "--n", "5", "--d", "1", "--format", "json")
    assert "-++++" in json.loads(out)["sequences"]


def test_search_by_klambda():
    code, out = run_cli("search", "--n", "7", "--k", "3", "--lambda", "1",
                        "--format", "json")
    assert code == 0
    assert ["0", "1", "3"] in json.loads(out)["sets"]


def test_verify_set():
    code, out = run_cli("verify", "--n", "40",
                        "--set", "1,2,3,5,6,9,14,15,18,20,25,27,35")
    assert code == 0 and "(40, 13, 4)" in out
    code, out = run_cli("verify", "--n", "7", "--set", "1,2,3")
    assert code == 0 and "not a difference set" in out


def test_outputs_are_reproducible():
    a = run_cli("certify", "--n", "2433602", "--d", "2", "--format", "json")
    b = run_cli("certify", "--n", "2433602", "--d", "2", "--format", "json")
    assert a == b


def test_env_override(monkeypatch):
    monkeypatch.setenv("SEQCERT_FORMAT", "json")
    code, out = run_cli("verify", "--n", "7", "--set", "1,2,4")
    assert code == 0
    assert json.loads(out)["valid"] is True
    # explicit flag wins over the environment
    code, out = run_cli("verify", "--n", "7", "--set", "1,2,4",
                        "--format", "text")
    assert "valid (7, 3, 1)" in out
