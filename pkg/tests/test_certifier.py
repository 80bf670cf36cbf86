import pytest

from seqcert.certifier import (
    Certificate,
    KNOWN_WITNESS_SETS,
    RULE_BRC_EVEN,
    RULE_BRC_ODD,
    RULE_DSC,
    RULE_FEASIBILITY,
    RULE_MANN,
    RULE_TURYN,
    brc_even,
    brc_odd,
    certify,
    certify_params,
    dsc_test,
    mann_test,
    size_bound_test,
    turyn_test,
)
from seqcert.seqcore import CdsParams, verify_cds


def test_brc_even_examples():
    assert brc_even(CdsParams(40, 13, 4)).verdict == "open"
    assert brc_even(CdsParams(12546, 6176, 3040)).verdict == "open"
    cert = brc_even(CdsParams(22, 7, 2))
    assert cert.verdict == "nonexistent" and cert.rule == RULE_BRC_EVEN
    with pytest.raises(ValueError):
        brc_even(CdsParams(7, 3, 1))


def test_brc_odd_examples():
    assert brc_odd(CdsParams(7, 3, 1)).verdict == "open"  # (1,1,1) solves
    assert brc_odd(CdsParams(31, 10, 3)).verdict == "open"  # (2,1,1) solves
    cert = brc_odd(CdsParams(43, 15, 5))
    assert cert.verdict == "nonexistent" and cert.rule == RULE_BRC_ODD
    with pytest.raises(ValueError):
        brc_odd(CdsParams(40, 13, 4))


def test_brc_odd_with_zero_lambda():
    assert brc_odd(CdsParams(7, 1, 0)).verdict == "open"


def test_dsc_examples():
    cert = dsc_test(CdsParams(12546, 6176, 3040))
    assert cert.verdict == "nonexistent" and cert.witness("p") == 3
    cert = dsc_test(CdsParams(174726, 87001, 43320))
    assert cert.verdict == "nonexistent" and cert.witness("p") == 3
    assert dsc_test(CdsParams(6, 1, 0)).verdict == "open"
    with pytest.raises(ValueError):
        dsc_test(CdsParams(7, 3, 1))


def test_dsc_skips_trivial_parameters():
    # (9, 1, 0) is realizable by a single residue even though 9 = 3^2
    assert dsc_test(CdsParams(9, 1, 0)).verdict == "open"


def test_mann_examples():
    cert = mann_test(CdsParams(25, 9, 3))
    assert cert.verdict == "nonexistent"
    assert cert.witness("e") == 5 and cert.witness("p") == 2
    assert cert.witness("valuation") == 1
    cert = mann_test(CdsParams(41, 16, 6))
    assert cert.witness("e") == 41 and cert.witness("p") == 2
    assert cert.witness("c") == 10
    assert pow(2, 10, 41) == 40
    assert mann_test(CdsParams(6, 1, 0)).verdict == "open"


def test_mann_complement_invariance():
    for params in (CdsParams(25, 9, 3), CdsParams(41, 16, 6),
                   CdsParams(31, 10, 3)):
        comp = params.complement()
        assert mann_test(params).verdict == mann_test(comp).verdict


def test_turyn_examples():
    cert = turyn_test(CdsParams(2433602, 1215450, 607050), 3, 1216801)
    assert cert.verdict == "nonexistent"
    assert cert.witness("lhs") == 3650403
    assert cert.witness("rhs") == 2433602
    assert cert.witness("semiprimitivity_exponent") == 20235
    assert turyn_test(CdsParams(6, 1, 0), 1, 3).verdict == "open"
    with pytest.raises(ValueError):
        turyn_test(CdsParams(6, 1, 0), 2, 3)  # 4 does not divide 1


def test_turyn_open_for_table1_tail_row():
    params = CdsParams(33895686, 16942801, 8468880)
    for e in (2, 3, 16947843):
        assert turyn_test(params, 2911, e).verdict == "open"


def test_size_bound_examples():
    cert = size_bound_test(CdsParams(260, 112, 48), 4, 8)
    assert cert.verdict == "nonexistent"
    assert cert.witness("e") == 65 and pow(8, 2, 65) == 64
    assert size_bound_test(CdsParams(40, 13, 4), 4, 3).verdict == "open"
    assert size_bound_test(CdsParams(8, 1, 0), 4, 1).verdict == "open"
    assert size_bound_test(CdsParams(8, 1, 0), 2, 1).verdict == "open"


def test_size_bound_h_one_is_allowed():
    # strongest form of the bound: m must be 1 when m is semiprimitive mod n
    cert = size_bound_test(CdsParams(211, 91, 39), 1, 2)
    assert cert.verdict == "nonexistent"
    assert cert.witness("e") == 211


def test_certify_examples():
    cert = certify(25, 1)
    assert cert.verdict == "nonexistent" and cert.rule == RULE_MANN
    cert = certify(40, 4)
    assert cert.verdict == "exists"
    assert verify_cds(40, cert.witness_set) == CdsParams(40, 13, 4)
    cert = certify(12546, 2)
    assert cert.verdict == "nonexistent" and cert.rule == RULE_DSC
    cert = certify(33895686, 2)
    assert cert.verdict == "open"


def test_certify_infeasible():
    cert = certify(14, 1)
    assert cert.verdict == "nonexistent" and cert.rule == RULE_FEASIBILITY


def test_certify_trivial_and_known_witnesses():
    for (n, d), elements in KNOWN_WITNESS_SETS.items():
        cert = certify(n, d)
        assert cert.verdict == "exists"
        params = verify_cds(n, cert.witness_set)
        assert params == cert.params
        assert params.d == d


def test_certify_all_rules():
    certs = certify(12546, 2, all_rules=True)
    assert isinstance(certs, list)
    assert certs[0].rule == RULE_DSC
    assert len(certs) >= 3


def test_certificate_json_roundtrip():
    samples = [
        certify(25, 1),
        certify(40, 4),
        certify(12546, 2),
        certify(14, 1),
        certify(33895686, 2),
        turyn_test(CdsParams(2433602, 1215450, 607050), 3, 1216801),
    ]
    for cert in samples:
        blob = cert.to_json()
        assert Certificate.from_json(blob) == cert
        # fixed key order on the wire
        keys = list(cert.to_json_dict())
        assert keys == ["n", "k", "lambda", "d", "verdict", "rule",
                        "witnesses", "witness_set", "reason", "tool_version"]


def test_certificate_integers_are_decimal_strings():
    obj = certify(12546, 2).to_json_dict()
    assert obj["n"] == "12546"
    assert all(isinstance(v, str) for v in obj["witnesses"].values())


def test_certificate_validation():
    with pytest.raises(ValueError):
        Certificate(CdsParams(7, 3, 1), "open")  # no reason
    with pytest.raises(ValueError):
        Certificate(CdsParams(7, 3, 1), "exists", witness_set=(0, 1, 2))


def test_certify_params_open_case():
    cert = certify_params(CdsParams(16, 6, 2))
    assert cert.verdict == "open"
    assert cert.reason
