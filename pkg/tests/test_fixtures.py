import json
from dataclasses import replace

import pytest

from stretched.fixtures import FIXTURES, fixture_by_id, verify_all, verify_fixture


@pytest.mark.parametrize("fx", FIXTURES, ids=lambda f: f.id)
def test_fixture_matches(fx):
    res = verify_fixture(fx)
    assert res.passed, res.diffs


def test_registry_shape():
    ids = [f.id for f in FIXTURES]
    assert len(ids) == len(set(ids)) >= 14
    assert sum(i.startswith("ex-6.8-") for i in ids) == 6
    assert sum(i.startswith("ex-5.11-") for i in ids) == 4
    assert any(i.startswith("cor67-") for i in ids)
    json.dumps([f.to_dict() for f in FIXTURES])


def test_single_fixture():
    (res,) = verify_all(["ex-6.8-2"])
    rep, hd = res.report, res.hilbert
    assert (rep.r, rep.n, rep.lambda_set, hd.e1, rep.depth_g) == (3, 2, {2}, 7, 0)


def test_erratum_is_reported():
    res = verify_fixture(fixture_by_id("ex-5.11-4"))
    assert res.passed and res.hilbert.e0 == 10
    text = " ".join(res.errata)
    assert "printed 9" in text and "printed 13" in text and "erratum confirmed" in text


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture_by_id("ex-9.9")


def test_wrong_expectation_is_a_diff():
    fx = fixture_by_id("ex-5.8")
    res = verify_fixture(replace(fx, expected={**fx.expected, "e1": 10}))
    assert not res.passed and any("e1" in d for d in res.diffs)


def test_stale_erratum_is_a_diff():
    fx = fixture_by_id("ex-5.11-2")
    res = verify_fixture(replace(fx, printed={"e1": 15}))
    assert not res.passed
