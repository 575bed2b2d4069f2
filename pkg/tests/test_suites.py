import json

import pytest

from pocket_spectra.suites import SUITES, run_suite

SMALL = {"prop31": 8, "prop35": 8, "prop41": 4, "eq16": 4, "thm21": 6, "thm22": 6}


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes(name):
    report = run_suite(name, seed=11, count=SMALL.get(name))
    assert report.ok, json.dumps([r.to_json() for r in report.instances if not r.passed][:2])
    assert report.instances


@pytest.mark.parametrize("name", ["prop31", "prop41", "thm21"])
def test_deterministic_across_worker_counts(name):
    a = run_suite(name, seed=5, count=6, workers=1).to_json()
    b = run_suite(name, seed=5, count=6, workers=4).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    c = run_suite(name, seed=6, count=6).to_json()
    assert c["instances"] != a["instances"]


def test_suite_parameters():
    rep = run_suite("thm46", n=4)
    assert len(rep.instances) == 1 and rep.ok
    assert rep.max_deviation <= 1e-9
    rep = run_suite("inherit", kind="Q-edge")
    assert rep.ok and {r.detail["kind"] for r in rep.instances} == {"Q-edge"}


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("prop99")
