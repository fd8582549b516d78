# verify/base_check.py
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from algebra.exact_core import RiordanError
from algebra.series import TruncatedSeries
from arrays.riordan import NumeratorResult, catalog_series
from config.check_catalog import get_check_by_id
from config.settings import CheckParams
from utils.output_doc import render_exact

logger = logging.getLogger(__name__)

# Argomenti di genbinom usati come casi
GENBINOM_CASES = ("1/2", "-1", "2")


def catalog_cases(order: int) -> List[Tuple[str, TruncatedSeries]]:
    """Serie del catalogo (con alcuni genbinom) come casi di test"""
    cases = [(name, catalog_series(name, order)) for name in ("exp", "geom", "onepx", "catalan")]
    cases += [(f"genbinom({arg})", catalog_series("genbinom", order, Fraction(arg)))
              for arg in GENBINOM_CASES]
    return cases


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"
    NOT_RUN = "not_run"


@dataclass
class Counterexample:
    """Primo caso in cui i due lati differiscono, con i valori già resi in forma esatta"""
    parameters: Dict[str, str]
    left: Any
    right: Any
    residual: Tuple[Tuple[int, Any], ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "parameters": self.parameters,
            "left": render_exact(self.left),
            "right": render_exact(self.right),
            "residual": [[k, render_exact(v)] for k, v in self.residual],
        }


@dataclass
class CheckReport:
    """Esito di un check del catalogo"""
    check_id: str
    parameters: Dict[str, Any]
    status: CheckStatus
    cases: int = 0
    counterexample: Optional[Counterexample] = None
    message: str = ""
    elapsed: float = 0.0

    @property
    def verdict(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_dict(self, include_elapsed: bool = True) -> Dict[str, Any]:
        """Converte il report in dizionario"""
        data = {
            "check_id": self.check_id,
            "status": self.status.value,
            "cases": self.cases,
            "message": self.message,
            "parameters": self.parameters,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }
        if include_elapsed:
            data["elapsed"] = round(self.elapsed, 6)
        return data


def _same(left: Any, right: Any) -> bool:
    if isinstance(left, TruncatedSeries) and isinstance(right, TruncatedSeries):
        return left.agrees_with(right)
    return left == right


@dataclass
class CaseLog:
    """Conta i casi di un check e conserva il primo controesempio"""
    cases: int = 0
    failures: int = 0
    first: Optional[Counterexample] = None
    _notes: List[str] = field(default_factory=list)

    def _record(self, ok: bool, parameters: Dict[str, Any], left: Any, right: Any,
                residual: Tuple[Tuple[int, Any], ...] = ()) -> bool:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = Counterexample(
                    {k: str(v) for k, v in parameters.items()},
                    render_exact(left), render_exact(right),
                    tuple((k, render_exact(v)) for k, v in residual),
                )
        return ok

    def compare(self, left: Any, right: Any, /, **parameters: Any) -> bool:
        """Uguaglianza esatta dei due lati"""
        return self._record(_same(left, right), parameters, left, right)

    def expect(self, condition: bool, /, **parameters: Any) -> bool:
        """Condizione booleana (i due lati sono esito e True)"""
        return self._record(bool(condition), parameters, bool(condition), True)

    def zero(self, residual_series: TruncatedSeries, /, **parameters: Any) -> bool:
        """Serie residua nulla fino al suo ordine"""
        residual = tuple((k, c) for k, c in enumerate(residual_series.coeffs) if c != 0)
        return self._record(not residual, parameters, residual_series, 0, residual)

    def numerator(self, result: NumeratorResult, /, **parameters: Any):
        """Numeratore certificato; un residuo non nullo conta come fallimento"""
        if not result.residual_ok:
            self._record(False, parameters, result.numerator, "residual", result.residual)
        return result.numerator

    def note(self, text: str):
        self._notes.append(text)

    @property
    def message(self) -> str:
        if self.failures:
            return f"{self.failures}/{self.cases} cases failed"
        return "; ".join(self._notes)


CheckBody = Callable[[CaseLog], None]


class BaseVerifier(ABC):
    """Classe base per tutti i verificatori"""

    def __init__(self, params: CheckParams):
        self.params = params
        self.reports: List[CheckReport] = []

    @abstractmethod
    def checks(self) -> Dict[str, CheckBody]:
        """Mappa check_id -> corpo del check"""
        pass

    def supports(self, check_id: str) -> bool:
        return check_id in self.checks()

    def n_limit(self, check_id: str) -> int:
        """n massimo del check: --max-n esplicito, poi metadata del catalogo, poi max_n"""
        if self.params.max_n_override is not None:
            return self.params.max_n_override
        rule = get_check_by_id(check_id)
        if rule is None:
            return self.params.max_n
        return rule.metadata.get("n_max", self.params.max_n)

    @property
    def order(self) -> int:
        """Ordine di troncamento per le serie dei casi"""
        return max(self.params.series_order, self.params.max_n + self.params.guard)

    def run(self, check_id: str) -> CheckReport:
        """Esegue un check e ne registra l'esito"""
        body = self.checks()[check_id]
        log = CaseLog()
        start = time.perf_counter()
        try:
            body(log)
            status = CheckStatus.FAIL if log.failures else CheckStatus.PASS
            message = log.message
        except RiordanError as e:
            logger.error("❌ %s raised %s: %s", check_id, type(e).__name__, e)
            status, message = CheckStatus.ERROR, f"{type(e).__name__}: {e}"
        report = CheckReport(
            check_id=check_id,
            parameters=self.params.to_dict(),
            status=status,
            cases=log.cases,
            counterexample=log.first,
            message=message,
            elapsed=time.perf_counter() - start,
        )
        self.reports.append(report)
        return report

    def get_reports_by_status(self, status: CheckStatus) -> List[CheckReport]:
        return [r for r in self.reports if r.status == status]

    def get_reports_summary(self) -> Dict[str, int]:
        """Ritorna sommario dei report per stato"""
        summary = {s.value: 0 for s in CheckStatus}
        for report in self.reports:
            summary[report.status.value] += 1
        return summary

    def clear_reports(self):
        self.reports = []
