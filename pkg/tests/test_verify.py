import json

import pytest

from cubelab.verify import CLAIM_IDS, DEFAULT_RANGES, run_verification


def test_unknown_claim_rejected():
    with pytest.raises(ValueError):
        run_verification(claims=["theorem0"])


def test_entries_unique_and_statuses_legal():
    report = run_verification(claims=["theorem2", "theorem3", "theorem4", "euler"])
    keys = [(e["claim"], e["n"]) for e in report.entries]
    assert len(keys) == len(set(keys))
    assert all(e["status"] in ("pass", "fail", "discrepancy-noted") for e in report.entries)


def test_n_range_restriction():
    report = run_verification(claims=["theorem2"], n_range=range(3, 5))
    assert [e["n"] for e in report.entries] == [3, 4]
    # out-of-domain requests are dropped rather than widened
    report = run_verification(claims=["theorem1"], n_range=range(1, 4))
    assert [e["n"] for e in report.entries] == [3]


def test_report_json_round_trip(tmp_path):
    report = run_verification(claims=["theorem4", "poisson"])
    path = tmp_path / "report.json"
    report.write(path)
    payload = json.loads(path.read_text())
    assert payload["summary"] == report.summary()
    assert payload["summary"]["fail"] == 0
    assert report.ok


def test_every_claim_id_has_a_check():
    assert set(DEFAULT_RANGES) <= set(CLAIM_IDS)
    report = run_verification(
        claims=["theorem5", "theorem6", "theorem7"], n_range=range(1, 3)
    )
    assert {e["claim"] for e in report.entries} == {"theorem5", "theorem6", "theorem7"}
    assert report.ok
