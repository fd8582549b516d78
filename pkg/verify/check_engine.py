# verify/check_engine.py
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from datetime import datetime
from itertools import repeat
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional

from algebra.exact_core import RiordanError
from config.check_catalog import CheckRule, get_check_by_id, get_enabled_checks
from config.settings import CheckParams, RiordanConfig
from utils.output_doc import STATUS_ICONS
from verify.base_check import BaseVerifier, CheckReport, CheckStatus
from verify.example_checks import ExampleVerifier
from verify.lagrange_checks import LagrangeVerifier
from verify.matrix_checks import MatrixVerifier
from verify.polynomial_checks import PolynomialVerifier

logger = logging.getLogger(__name__)


class UnknownCheckError(RiordanError):
    """CheckId fuori dal catalogo"""


VerifierFactory = Callable[[CheckParams], BaseVerifier]

DEFAULT_VERIFIERS: Dict[str, VerifierFactory] = {
    "matrix": MatrixVerifier,
    "polynomial": PolynomialVerifier,
    "lagrange": LagrangeVerifier,
    "example": ExampleVerifier,
}


def _run_isolated(config: RiordanConfig, check_id: str, params: CheckParams) -> CheckReport:
    """Esegue un check in un processo worker con un engine nuovo"""
    return CheckEngine(config).run_check(check_id, params)


class CheckEngine:
    """Engine principale per eseguire i check del catalogo"""

    def __init__(self, config: Optional[RiordanConfig] = None):
        self.config = config or RiordanConfig()
        self.verifiers: Dict[str, VerifierFactory] = {}
        self.all_reports: List[CheckReport] = []
        self._init_verifiers()

    def _init_verifiers(self):
        """Registra i verificatori per chiave del catalogo"""
        self.verifiers.update(DEFAULT_VERIFIERS)
        logger.debug("verifiers registered: %s", ", ".join(self.verifiers))

    def _rule(self, check_id: str) -> CheckRule:
        rule = get_check_by_id(check_id)
        if rule is None or rule.verifier not in self.verifiers:
            raise UnknownCheckError(f"unknown check id {check_id!r}")
        return rule

    def run_check(self, check_id: str, params: Optional[CheckParams] = None) -> CheckReport:
        """Esegue un singolo check; ogni eccezione diventa un report 'error'"""
        rule = self._rule(check_id)
        params = params or self.config.to_check_params()

        if not self.config.within_limits(params):
            logger.warning("⏭️  %s not run: parameters exceed configured limits", check_id)
            return CheckReport(check_id, params.to_dict(), CheckStatus.NOT_RUN,
                               message="parameters exceed configured limits")

        verifier = self.verifiers[rule.verifier](params)
        try:
            report = verifier.run(check_id)
        except Exception as e:
            logger.error("❌ %s crashed: %s", check_id, e)
            report = CheckReport(check_id, params.to_dict(), CheckStatus.ERROR,
                                 message=f"{type(e).__name__}: {e}")

        icon = STATUS_ICONS[report.status.value]
        logger.info("%s %s: %s (%d cases)", icon, check_id, report.status.value, report.cases)
        return report

    def run_suite(self, ids: Optional[Iterable[str]] = None,
                  params: Optional[CheckParams] = None,
                  workers: Optional[int] = None) -> List[CheckReport]:
        """Esegue i check su un pool di processi; i report seguono l'ordine degli id"""
        ids = [rule.check_id for rule in get_enabled_checks()] if ids is None else list(ids)
        for check_id in ids:
            self._rule(check_id)
        params = params or self.config.to_check_params()
        workers = workers or self.config.max_workers

        logger.info("🔍 Running %d checks with %d workers...", len(ids), workers)
        if not ids:
            self.all_reports = []
            return []

        if workers <= 1 or len(ids) == 1 or self.verifiers != DEFAULT_VERIFIERS:
            reports = [self.run_check(check_id, params) for check_id in ids]
        else:
            reports = self._run_parallel(ids, params, workers)

        self.all_reports = reports
        logger.info("✅ Suite completed: %s", self._generate_summary_line())
        return reports

    def _run_parallel(self, ids: List[str], params: CheckParams, workers: int) -> List[CheckReport]:
        try:
            with ProcessPoolExecutor(max_workers=min(workers, len(ids))) as pool:
                return list(pool.map(_run_isolated, repeat(self.config), ids, repeat(params)))
        except (OSError, BrokenProcessPool) as e:
            logger.warning("⚠️  process pool unavailable (%s), running sequentially", e)
            return [self.run_check(check_id, params) for check_id in ids]

    # --- riepilogo e report -------------------------------------------------------
    def get_summary(self) -> Dict[str, int]:
        """Conteggio dei report per stato"""
        summary = {status.value: 0 for status in CheckStatus}
        for report in self.all_reports:
            summary[report.status.value] += 1
        return summary

    def _generate_summary_line(self) -> str:
        summary = self.get_summary()
        return ", ".join(f"{STATUS_ICONS[k]} {k}: {v}" for k, v in summary.items())

    def all_passed(self) -> bool:
        return all(report.status is CheckStatus.PASS for report in self.all_reports)

    def get_reports_by_status(self, status: CheckStatus) -> List[CheckReport]:
        return [r for r in self.all_reports if r.status == status]

    def save_reports(self, report_dir: Optional[str] = None) -> Optional[Path]:
        """Salva i report in JSON e markdown secondo output_formats"""
        reports_dir = Path(report_dir or self.config.report_dir)
        try:
            reports_dir.mkdir(parents=True, exist_ok=True)
            data = {
                "metadata": {
                    "run_time": datetime.now().isoformat(),
                    "total_checks": len(self.all_reports),
                    "summary": self.get_summary(),
                },
                "reports": [r.to_dict() for r in self.all_reports],
            }
            if "json" in self.config.output_formats:
                json_file = reports_dir / "check_report.json"
                with open(json_file, "w") as f:
                    json.dump(data, f, indent=2)
                logger.info("💾 Reports saved to %s", json_file)
            if "md" in self.config.output_formats:
                self._generate_markdown_report(data, reports_dir / "check_report.md")
            return reports_dir
        except OSError as e:
            logger.error("❌ Error saving reports: %s", e)
            return None

    def _generate_markdown_report(self, data: Dict, report_file: Path):
        """Genera report markdown"""
        metadata = data["metadata"]
        lines = [
            "# 📊 Riordan Check Report",
            "",
            f"**Run Date**: {metadata['run_time']}",
            f"**Total Checks**: {metadata['total_checks']}",
            "",
            "## Summary by Status",
            "",
            "| Status | Count |",
            "|--------|-------|",
        ]
        for status, count in metadata["summary"].items():
            lines.append(f"| {STATUS_ICONS[status]} {status} | {count} |")

        lines += ["", "## Checks", "", "| Check | Status | Cases | Note |", "|-------|--------|-------|------|"]
        for report in data["reports"]:
            icon = STATUS_ICONS[report["status"]]
            lines.append(f"| {report['check_id']} | {icon} {report['status']} | {report['cases']} | {report['message']} |")

        failed = [r for r in data["reports"] if r["counterexample"]]
        if failed:
            lines += ["", "## ❌ Counterexamples", ""]
            for report in failed:
                example = report["counterexample"]
                lines.append(f"### {report['check_id']}")
                lines.append(f"**Parameters**: `{json.dumps(example['parameters'], sort_keys=True)}`")
                lines.append(f"**Left**: `{json.dumps(example['left'])}`")
                lines.append(f"**Right**: `{json.dumps(example['right'])}`")
                if example["residual"]:
                    lines.append(f"**Residual**: `{json.dumps(example['residual'])}`")
                lines.append("")

        with open(report_file, "w") as f:
            f.write("\n".join(lines) + "\n")
        logger.info("📋 Markdown report saved to %s", report_file)


def run_check(check_id: str, params: Optional[CheckParams] = None) -> CheckReport:
    return CheckEngine().run_check(check_id, params)


def run_suite(ids: Optional[Iterable[str]] = None, params: Optional[CheckParams] = None) -> List[CheckReport]:
    return CheckEngine().run_suite(ids, params)
