# tests/test_check_engine.py
import json
from fractions import Fraction

import pytest

from algebra.series import TruncatedSeries

from config.check_catalog import (
    PREDEFINED_CHECKS,
    CheckCategory,
    all_check_ids,
    get_check_by_id,
    get_checks_for_category,
)
from config.settings import CheckParams, RiordanConfig
from verify.base_check import CaseLog, CheckStatus
from verify.check_engine import CheckEngine, UnknownCheckError
from verify.displayed import displayed_mismatches
from verify.polynomial_checks import PolynomialVerifier


class TestCatalog:
    def test_ids_are_unique_and_ordered(self):
        ids = all_check_ids()
        assert len(ids) == len(set(ids)) == len(PREDEFINED_CHECKS)
        assert ids[0] == "T1"

    def test_every_rule_has_a_verifier(self, small_params):
        engine = CheckEngine()
        for check_id in all_check_ids():
            rule = get_check_by_id(check_id)
            verifier = engine.verifiers[rule.verifier](small_params)
            assert verifier.supports(check_id), check_id

    def test_lookup(self):
        assert get_check_by_id("nope") is None
        assert {r.check_id for r in get_checks_for_category(CheckCategory.ORACLE)} == {
            "ORACLE_ARRAY", "REVERSION_ORACLE"}


class TestEngine:
    @pytest.mark.parametrize("check_id", ["T1", "EULER", "DISPLAYED", "CATALOG_CONSISTENCY", "DUALBASIS",
                                          "LAGRANGE_FUNCEQ", "LAGRANGE_EXTRACT"])
    def test_checks_pass(self, small_params, check_id):
        report = CheckEngine().run_check(check_id, small_params)
        assert report.status is CheckStatus.PASS, report.message
        assert report.cases > 0
        assert report.counterexample is None

    def test_unknown_id(self):
        with pytest.raises(UnknownCheckError):
            CheckEngine().run_check("T99")
        with pytest.raises(UnknownCheckError):
            CheckEngine().run_suite(["T1", "T99"])

    def test_limits_give_not_run(self):
        report = CheckEngine().run_check("T1", CheckParams(max_n=50))
        assert report.status is CheckStatus.NOT_RUN
        assert report.cases == 0

    def test_crash_becomes_error(self, small_params):
        engine = CheckEngine()
        engine.verifiers["matrix"] = lambda params: _Exploding()
        report = engine.run_check("T1", small_params)
        assert report.status is CheckStatus.ERROR
        assert "boom" in report.message

    def test_empty_suite(self):
        engine = CheckEngine()
        assert engine.run_suite([]) == []
        assert engine.all_passed()

    def test_suite_keeps_order(self, small_params):
        engine = CheckEngine(RiordanConfig(max_workers=2))
        reports = engine.run_suite(["EULER", "T1", "STIRLING"], small_params)
        assert [r.check_id for r in reports] == ["EULER", "T1", "STIRLING"]
        assert engine.get_summary()["pass"] == 3
        assert engine.all_passed()

    def test_custom_verifiers_run_sequentially(self, small_params):
        engine = CheckEngine(RiordanConfig(max_workers=2))
        engine.verifiers["matrix"] = lambda params: _Exploding()
        reports = engine.run_suite(["T1", "EULER"], small_params)
        assert [r.status for r in reports] == [CheckStatus.ERROR, CheckStatus.PASS]

    def test_explicit_max_n_beats_catalog_limit(self):
        config = RiordanConfig()
        assert PolynomialVerifier(config.to_check_params()).n_limit("EULER") == 8
        assert PolynomialVerifier(config.to_check_params(max_n=2)).n_limit("EULER") == 2
        report = CheckEngine(config).run_check("EULER", config.to_check_params(max_n=2))
        assert report.status is CheckStatus.PASS
        assert report.parameters["max_n_override"] == 2

    def test_save_reports(self, tmp_path, small_params):
        engine = CheckEngine()
        engine.run_suite(["T1"], small_params)
        assert engine.save_reports(str(tmp_path)) == tmp_path
        data = json.loads((tmp_path / "check_report.json").read_text())
        assert data["metadata"]["total_checks"] == 1
        assert data["reports"][0]["check_id"] == "T1"
        assert "T1" in (tmp_path / "check_report.md").read_text()


class TestCaseLog:
    def test_zero_accepts_a_series_label(self):
        log = CaseLog()
        assert log.zero(TruncatedSeries([0, 0], 1), series="catalan", beta=Fraction(1, 2))
        assert not log.zero(TruncatedSeries([0, 3], 1), series="geom")
        assert (log.cases, log.failures) == (2, 1)
        assert log.first.parameters == {"series": "geom"}
        assert log.first.residual == ((1, "3"),)

    def test_side_names_are_free_labels(self):
        log = CaseLog()
        assert log.compare(1, 1, left="a", right="b")
        assert log.expect(True, condition="c")
        assert not log.compare(Fraction(1, 2), 1, n=0)
        assert (log.first.left, log.first.right) == ("1/2", "1")


class _Exploding:
    def run(self, check_id):
        raise RuntimeError("boom")


def test_displayed_tables_are_reproduced():
    assert displayed_mismatches() == []
