import dataclasses

import pytest

from seqcert.certifier import (
    Certificate,
    brc_even,
    brc_odd,
    certify,
    dsc_test,
    mann_test,
    size_bound_test,
    turyn_test,
)
from seqcert.families import (
    t41ne2_check,
    t4137_check,
    t43ne_check,
    t43nee_check,
)
from seqcert.oracle import exhaustive_cds_search
from seqcert.recheck import verify_certificate
from seqcert.seqcore import CdsParams


NONEXISTENT_SAMPLES = [
    brc_even(CdsParams(22, 7, 2)),
    brc_odd(CdsParams(43, 15, 5)),
    dsc_test(CdsParams(12546, 6176, 3040)),
    mann_test(CdsParams(25, 9, 3)),
    mann_test(CdsParams(41, 16, 6)),
    turyn_test(CdsParams(2433602, 1215450, 607050), 3, 1216801),
    size_bound_test(CdsParams(260, 112, 48), 4, 8),
    t4137_check(7),
    t4137_check(13),
    t41ne2_check(27, 5, 1, 1, 13),
    t43ne_check(27),
    t43nee_check(37, 7, 5),
    t43nee_check(61, 19, 2),
    certify(14, 1),  # feasibility failure
]


@pytest.mark.parametrize("cert", NONEXISTENT_SAMPLES,
                         ids=lambda c: f"{c.rule}-{c.params.n}")
def test_accepts_sound_certificates(cert):
    res = verify_certificate(cert)
    assert res.accepted, res.detail


def test_accepts_exists_certificates():
    assert verify_certificate(certify(40, 4)).accepted
    assert verify_certificate(certify(13, 1)).accepted


def test_rejects_tampered_witness():
    cert = mann_test(CdsParams(25, 9, 3))
    tampered = dataclasses.replace(
        cert, witnesses=tuple((k, v if k != "c" else v + 1)
                              for k, v in cert.witnesses))
    assert not verify_certificate(tampered).accepted


def test_rejects_wrong_parameters():
    cert = mann_test(CdsParams(25, 9, 3))
    tampered = dataclasses.replace(cert, params=CdsParams(25, 1, 0),
                                   witness_set=None)
    assert not verify_certificate(tampered).accepted


def test_rejects_forged_inequality():
    cert = turyn_test(CdsParams(2433602, 1215450, 607050), 3, 1216801)
    forged = dataclasses.replace(
        cert, witnesses=tuple((k, v if k != "rhs" else v * 2)
                              for k, v in cert.witnesses))
    assert not verify_certificate(forged).accepted


def test_oracle_certificates_need_replay():
    res = exhaustive_cds_search(25, 9, 3)
    assert res.complete and not res.sets
    cert = Certificate(CdsParams(25, 9, 3), "nonexistent", rule="ORACLE",
                       reason="exhaustive search", d=1)
    assert not verify_certificate(cert).accepted
    assert verify_certificate(cert, oracle_replay_cap=60.0).accepted


def test_oracle_replay_rejects_false_nonexistence():
    cert = Certificate(CdsParams(7, 3, 1), "nonexistent", rule="ORACLE",
                       reason="forged", d=3)
    res = verify_certificate(cert, oracle_replay_cap=60.0)
    assert not res.accepted and "found a set" in res.detail
