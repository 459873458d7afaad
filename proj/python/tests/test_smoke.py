import pytest

import gaquot

WINK = {"blocks": [{"sym": 1}, {"vblock": 2}], "normalization": "section5"}


def test_fixture_names():
    names = gaquot.fixture_names()
    for n in ("winkelmann", "sl2-in-v2", "affine-slice", "deveney-finston"):
        assert n in names


@pytest.mark.parametrize(
    "name,code,verdict",
    [
        ("winkelmann", 10, "StrictlyQuasiAffine"),
        ("sl2-in-v2", 10, "StrictlyQuasiAffine"),
        ("affine-slice", 0, "Affine"),
        ("deveney-finston", 20, "NotEverywhereStable"),
    ],
)
def test_fixture_verdicts(name, code, verdict):
    exit_code, report = gaquot.classify_fixture(name)
    assert exit_code == code
    assert report["schema"] == gaquot.REPORT_SCHEMA
    assert report["verdict"] == verdict


def test_kernel_generators():
    assert gaquot.kernel_generators(WINK, 2) == [
        "w0", "w2", "w4", "w0*w3 - w1*w2", "w0*w5 - w1*w4", "w2*w5 - w3*w4",
    ]


def test_parser():
    assert gaquot.canonical("(w0 + w1)^2", ["w0", "w1"]) == "w0^2 + 2*w0*w1 + w1^2"
    assert gaquot.parse_error_position("w0 +", ["w0"]) == 4
    assert gaquot.parse_error_position("w0", ["w0"]) is None
    with pytest.raises(gaquot.ParseError):
        gaquot.canonical("w0 $", ["w0"])


def test_job_errors_are_reports():
    code, report = gaquot.run_job({"representation": {"blocks": [{"sym": 1}]}, "polynomial": "1 - w1"})
    assert code == 1
    assert report["error"]["kind"] == "precondition"
    with pytest.raises(gaquot.GaquotError):
        gaquot.run_job({"frobnicate": 1})


def test_relation_and_roundtrip():
    assert gaquot.verify_winkelmann_relation()
    job = gaquot.fixture_job("sl2-in-v2")
    assert gaquot.run_job(job) == gaquot.classify_fixture("sl2-in-v2")
