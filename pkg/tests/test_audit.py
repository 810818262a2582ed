"""Claim ledger: verdicts, replay, monotonicity, completeness."""

import pytest

import fltaudit.audit as audit_mod
from fltaudit.audit import (
    FAILS,
    HOLDS,
    UNDECIDED,
    AuditConfig,
    compare_to_manifest,
    load_default_manifest,
    replay_evidence,
    run_audit,
)

SMALL = AuditConfig(
    identity_n_min=3,
    identity_n_max=4,
    consistency_n_min=3,
    consistency_n_max=4,
    c_max=20,
    box_bound=3,
    search_bound=2,
    triple_base_max=30,
)


@pytest.fixture(scope="module")
def small_report():
    return run_audit(SMALL)


class TestVerdicts:
    def test_expected_verdicts_small_scope(self, small_report):
        summary = small_report.verdict_summary()
        assert summary["C1"] == HOLDS
        assert summary["C2"] == FAILS
        assert summary["C3"] == HOLDS
        assert summary["C4"] == HOLDS
        assert summary["C5"] == {"pairwise": FAILS, "adjacent": FAILS}
        assert small_report.claim("C6").verdict == HOLDS
        assert small_report.claim("C7").verdict == HOLDS

    def test_c2_carries_counterexample_evidence(self, small_report):
        triples = [tuple(item["triple"]) for item in small_report.claim("C2").evidence]
        assert (9, 12, 15) in triples
        assert (4, 3, 5) in triples
        assert small_report.claim("C2").data["primitive_even_b_failures"] == 0

    def test_c5_pairwise_evidence_contains_sum_zero_point(self, small_report):
        entry = small_report.claim("C5")
        pairwise_points = [
            tuple(item["point"])
            for item in entry.evidence
            if item["reading"] == "pairwise"
        ]
        assert (1, 2, -3) in pairwise_points

    def test_c6_marks_higher_exponents_undecided(self, small_report):
        entry = small_report.claim("C6")
        assert entry.subverdicts["exponent > 2"] == UNDECIDED
        assert entry.data["samples"] > 0

    def test_c7_records_trivial_solutions(self, small_report):
        entry = small_report.claim("C7")
        assert entry.data["trivial_solutions"] >= 1
        assert entry.data["certificate"]["exhausted"]

    def test_report_completeness(self, small_report):
        ids = [entry.claim_id for entry in small_report.claims]
        assert ids == ["C1", "C2", "C3", "C4", "C5", "C6", "C7"]

    def test_statements_have_no_citation_apparatus(self, small_report):
        for entry in small_report.claims:
            assert "Eq" not in entry.statement
            assert "paper" not in entry.statement.lower()


class TestReplay:
    def test_all_fails_evidence_replays(self, small_report):
        for entry in small_report.claims:
            if entry.verdict != FAILS:
                continue
            assert entry.evidence, f"{entry.claim_id} FAILS without evidence"
            for item in entry.evidence:
                assert replay_evidence(entry.claim_id, item, SMALL), (
                    entry.claim_id,
                    item,
                )

    def test_replay_rejects_fabricated_evidence(self):
        assert not replay_evidence("C2", {"triple": [3, 4, 5]})
        assert not replay_evidence("C1", {"n": 3})
        assert not replay_evidence(
            "C5", {"claim": "uvw_distinct_nonzero", "reading": "pairwise", "point": [1, 2, 4], "k": None}
        )

    def test_unknown_claim_rejected(self):
        with pytest.raises(KeyError):
            replay_evidence("C99", {})


class TestMonotonicity:
    def test_enlarging_scope_never_flips_fails_to_holds(self, small_report):
        bigger = run_audit(
            AuditConfig(
                identity_n_min=3,
                identity_n_max=5,
                consistency_n_min=3,
                consistency_n_max=5,
                c_max=40,
                box_bound=4,
                search_bound=3,
                triple_base_max=60,
            )
        )
        for entry in small_report.claims:
            if entry.verdict == FAILS:
                assert bigger.claim(entry.claim_id).verdict == FAILS
            if entry.subverdicts:
                larger_sub = bigger.claim(entry.claim_id).subverdicts
                for key, verdict in entry.subverdicts.items():
                    if verdict == FAILS:
                        assert larger_sub[key] == FAILS


class TestManifest:
    def test_default_scope_matches_shipped_manifest(self):
        report = run_audit()
        ok, drifts = compare_to_manifest(report, load_default_manifest())
        assert ok, drifts

    def test_drift_detection(self, small_report):
        manifest = {"C1": "FAILS"}
        ok, drifts = compare_to_manifest(small_report, manifest)
        assert not ok
        assert any("C1" in drift for drift in drifts)

    def test_subverdict_drift_detection(self, small_report):
        manifest = {"C5": {"pairwise": "HOLDS"}}
        ok, drifts = compare_to_manifest(small_report, manifest)
        assert not ok

    def test_missing_claim_detected(self, small_report):
        ok, drifts = compare_to_manifest(small_report, {"C42": "HOLDS"})
        assert not ok


class TestIsolation:
    def test_checker_crash_yields_undecided(self, monkeypatch):
        def boom(config):
            raise RuntimeError("synthetic failure")

        monkeypatch.setitem(audit_mod._CHECKERS, "C4", boom)
        report = run_audit(SMALL)
        entry = report.claim("C4")
        assert entry.verdict == UNDECIDED
        assert any("synthetic failure" in note for note in entry.notes)
        # The other claims are unaffected.
        assert report.claim("C1").verdict == HOLDS

    def test_config_validation(self):
        with pytest.raises(ValueError):
            AuditConfig(c_max=3)
        with pytest.raises(ValueError):
            AuditConfig(condition_k=2)
        with pytest.raises(ValueError):
            AuditConfig(identity_n_min=2)
