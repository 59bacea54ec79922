"""Campaign runner: determinism, coverage, precondition routing, ablations."""

import json

import pytest

from fuzzaut.harness import (
    ABLATION_TOKENS,
    DEFAULT_GROUPS,
    SECTION_4_STATEMENTS,
    STATEMENT_IDS,
    STATEMENTS,
    Campaign,
    ConfigInvalid,
    UnknownToken,
    ablation,
    campaign_report,
    run_campaign,
    statements_covered,
)
from fuzzaut.io import dumps, save


SMALL = Campaign(groups=("Z4", "S3"))


class TestCatalog:
    def test_every_statement_has_a_description(self):
        assert set(STATEMENT_IDS) == set(STATEMENTS)
        assert all(STATEMENTS[s] for s in STATEMENT_IDS)

    def test_default_groups(self):
        assert "S3" in DEFAULT_GROUPS and "Q8" in DEFAULT_GROUPS


class TestRunCampaign:
    def test_small_campaign_all_pass(self):
        results = run_campaign(SMALL)
        assert results and all(r.verdict for r in results)

    def test_coverage_is_the_whole_catalog(self):
        results = run_campaign(SMALL)
        assert statements_covered(results) == tuple(sorted(STATEMENT_IDS))

    def test_results_are_sorted(self):
        results = run_campaign(SMALL)
        keys = [(r.statement, r.instance) for r in results]
        assert keys == sorted(keys)

    def test_empty_group_list_gives_empty_results(self):
        assert run_campaign(Campaign(groups=())) == []

    def test_identical_config_identical_results(self):
        a = run_campaign(SMALL)
        b = run_campaign(SMALL)
        assert [(r.statement, r.instance, r.verdict, r.witness) for r in a] == [
            (r.statement, r.instance, r.verdict, r.witness) for r in b
        ]

    def test_stable_report_bytes(self):
        a = dumps(campaign_report(SMALL, run_campaign(SMALL)))
        b = dumps(campaign_report(SMALL, run_campaign(SMALL)))
        assert a == b

    def test_unknown_suite_rejected(self):
        with pytest.raises(ConfigInvalid):
            run_campaign(Campaign(groups=("Z4",), suites=("Lemma 9.9",)))

    def test_unknown_group_rejected(self):
        with pytest.raises(ConfigInvalid):
            run_campaign(Campaign(groups=("Z99",)))

    def test_threads_do_not_change_the_report(self, monkeypatch):
        base = dumps(campaign_report(SMALL, run_campaign(SMALL)))
        monkeypatch.setenv("FUZZAUT_THREADS", "4")
        threaded = dumps(campaign_report(SMALL, run_campaign(SMALL)))
        assert base == threaded


class TestPreconditionRouting:
    @pytest.fixture
    def corrupted_mu_file(self, tmp_path):
        # class-asymmetric grades on Q8: a fuzzy subgroup inequality breaks
        path = tmp_path / "bad_mu.json"
        save(
            path,
            {
                "group": "Q8",
                "grades": ["1", "1/2", "1/4", "1/4", "1/2", "1/4", "1/4", "1/4"],
            },
        )
        return f"file:{path}"

    def test_corrupted_mu_hits_only_graded_suites(self, corrupted_mu_file):
        campaign = Campaign(groups=("Q8",), mu_sources=("class", corrupted_mu_file))
        results = run_campaign(campaign)
        bad = [r for r in results if corrupted_mu_file in r.instance]
        good = [r for r in results if corrupted_mu_file not in r.instance]
        assert bad and all(not r.verdict for r in bad)
        assert all("MuNotNormal" in r.witness for r in bad)
        assert {r.statement for r in bad} == set(SECTION_4_STATEMENTS)
        assert good and all(r.verdict for r in good)
        assert statements_covered(good) == tuple(sorted(STATEMENT_IDS))


class TestAblation:
    def test_drop_nothing_is_run_campaign(self):
        assert ablation(SMALL, None) == run_campaign(SMALL)

    def test_unknown_token(self):
        with pytest.raises(UnknownToken):
            ablation(SMALL, "associativity")

    def test_tokens_are_published(self):
        assert ABLATION_TOKENS == ("pointed", "normal-mu")

    def test_pointed_ablation_records_expected_failure(self):
        rows = ablation(Campaign(groups=("Z2",)), "pointed")
        assert len(rows) == 1
        row = rows[0]
        assert row.verdict and row.expected_failure
        assert "MultipleUnitEntries" in row.witness

    def test_pointed_ablation_cannot_fail_on_trivial_group(self):
        rows = ablation(Campaign(groups=("Z1",)), "pointed")
        assert len(rows) == 1 and not rows[0].verdict

    def test_normality_ablation_finds_counterexample(self):
        rows = ablation(Campaign(groups=("S3",)), "normal-mu")
        assert len(rows) == 1
        row = rows[0]
        assert row.verdict and row.expected_failure
        assert "counterexample" in row.witness

    def test_normality_ablation_skips_groups_without_non_normal_subgroups(self):
        # every subgroup of Q8 and of abelian groups is normal
        assert ablation(Campaign(groups=("Z6", "Q8")), "normal-mu") == []

    def test_ablation_is_deterministic(self):
        campaign = Campaign(groups=("Z2", "S3", "D4"))
        for token in ABLATION_TOKENS:
            assert ablation(campaign, token) == ablation(campaign, token)


class TestReport:
    def test_schema_keys(self):
        results = run_campaign(Campaign(groups=("Z4",)))
        report = campaign_report(Campaign(groups=("Z4",)), results)
        assert set(report) == {"campaign", "results", "summary"}
        assert set(report["summary"]) == {"pass", "fail"}
        for row in report["results"]:
            assert set(row) == {"statement", "instance", "verdict", "witness", "ms", "expected"}

    def test_summary_counts(self):
        campaign = Campaign(groups=("Z4", "S3"))
        results = run_campaign(campaign)
        report = campaign_report(campaign, results)
        assert report["summary"]["pass"] == len(results)
        assert report["summary"]["fail"] == 0

    def test_json_round_trip_and_key_order(self):
        campaign = Campaign(groups=("Z4",))
        text = dumps(campaign_report(campaign, run_campaign(campaign)))
        parsed = json.loads(text)
        assert dumps(parsed) == text  # sorted keys make dumping idempotent
