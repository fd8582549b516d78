# utils/output_doc.py
"""Documenti di output della CLI: JSON canonico validato con jsonschema e resa umana con rich."""
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from jsonschema import Draft7Validator
from jsonschema.exceptions import ValidationError
from rich.console import Console
from rich.table import Table

from algebra.exact_core import ArgumentError, Polynomial, format_rational
from algebra.series import TruncatedSeries
from arrays.operator import FiniteOperator

logger = logging.getLogger(__name__)

RATIONAL_PATTERN = r"^-?\d+(/\d+)?$"

_RATIONAL = {"type": "string", "pattern": RATIONAL_PATTERN}
_COEFFS = {"type": "array", "items": _RATIONAL}

KIND_SCHEMAS: Dict[str, Dict[str, Any]] = {
    "polynomial": {
        "type": "object",
        "required": ["kind", "coeffs"],
        "properties": {
            "kind": {"const": "polynomial"},
            "label": {"type": "string"},
            "coeffs": _COEFFS,
        },
        "additionalProperties": False,
    },
    "numerator": {
        "type": "object",
        "required": ["kind", "coeffs", "index", "denominator_exponent", "residual_ok", "residual"],
        "properties": {
            "kind": {"const": "numerator"},
            "label": {"type": "string"},
            "coeffs": _COEFFS,
            "index": {"type": "integer", "minimum": 0},
            "denominator_exponent": {"type": "integer", "minimum": 1},
            "residual_ok": {"type": "boolean"},
            "residual": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": [{"type": "integer"}, _RATIONAL],
                    "minItems": 2,
                    "maxItems": 2,
                },
            },
        },
        "additionalProperties": False,
    },
    "matrix": {
        "type": "object",
        "required": ["kind", "name", "dim", "rows"],
        "properties": {
            "kind": {"const": "matrix"},
            "name": {"type": "string"},
            "dim": {"type": "integer", "minimum": 1},
            "rows": {"type": "array", "items": _COEFFS},
        },
        "additionalProperties": False,
    },
    "series": {
        "type": "object",
        "required": ["kind", "order", "coeffs"],
        "properties": {
            "kind": {"const": "series"},
            "label": {"type": "string"},
            "order": {"type": "integer", "minimum": 0},
            "coeffs": _COEFFS,
        },
        "additionalProperties": False,
    },
    "report": {
        "type": "object",
        "required": ["kind", "params", "reports", "summary"],
        "properties": {
            "kind": {"const": "report"},
            "params": {"type": "object"},
            "summary": {
                "type": "object",
                "additionalProperties": {"type": "integer", "minimum": 0},
            },
            "reports": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["check_id", "status", "cases"],
                    "properties": {
                        "check_id": {"type": "string"},
                        "status": {"enum": ["pass", "fail", "error", "not_run"]},
                        "cases": {"type": "integer", "minimum": 0},
                        "message": {"type": "string"},
                        "parameters": {"type": "object"},
                        "counterexample": {"type": ["object", "null"]},
                        "elapsed": {"type": "number"},
                    },
                },
            },
        },
        "additionalProperties": False,
    },
}

_VALIDATORS = {kind: Draft7Validator(schema) for kind, schema in KIND_SCHEMAS.items()}

STATUS_ICONS = {"pass": "✅", "fail": "❌", "error": "⚠️", "not_run": "⏭️"}


def render_exact(value: Any) -> Any:
    """Valore esatto -> struttura JSON con razionali come stringhe"""
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(Fraction(value))
    if isinstance(value, Polynomial):
        if any(isinstance(c, Polynomial) for c in value.coeffs):
            return [render_exact(c) for c in value.coeffs]
        return [format_rational(c) for c in value.coeffs] or ["0"]
    if isinstance(value, TruncatedSeries):
        return [render_exact(c) for c in value.coeffs]
    if isinstance(value, FiniteOperator):
        return value.render_rows()
    if isinstance(value, (list, tuple)):
        return [render_exact(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render_exact(v) for k, v in value.items()}
    return str(value)


class OutputDocError(ArgumentError):
    """Documento non conforme allo schema"""


@dataclass
class OutputDoc:
    """Documento tipizzato emesso dalla CLI"""
    kind: str
    payload: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        data = {"kind": self.kind}
        data.update(self.payload)
        return data

    def validate(self):
        if self.kind not in _VALIDATORS:
            raise OutputDocError(f"unknown document kind {self.kind!r}")
        try:
            _VALIDATORS[self.kind].validate(self.to_dict())
        except ValidationError as e:
            raise OutputDocError(f"{self.kind} document invalid: {e.message}") from e

    def to_json(self) -> str:
        self.validate()
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "OutputDoc":
        data = json.loads(text)
        if not isinstance(data, dict) or "kind" not in data:
            raise OutputDocError("document must be an object with a 'kind'")
        kind = data.pop("kind")
        doc = cls(kind, data)
        doc.validate()
        return doc

    # --- resa umana ----------------------------------------------------
    def render(self, console: Console):
        renderer = getattr(self, f"_render_{self.kind}")
        renderer(console)

    def _render_polynomial(self, console: Console):
        poly = Polynomial(Fraction(c) for c in self.payload["coeffs"])
        label = self.payload.get("label")
        console.print(f"{label} = {poly.render()}" if label else poly.render())

    def _render_numerator(self, console: Console):
        poly = Polynomial(Fraction(c) for c in self.payload["coeffs"])
        label = self.payload.get("label", f"numerator n={self.payload['index']}")
        console.print(f"{label} = {poly.render()}")
        console.print(f"denominator: (1-x)^{self.payload['denominator_exponent']}")
        if not self.payload["residual_ok"]:
            console.print(f"⚠️  nonzero residual: {self.payload['residual']}", style="yellow")

    def _render_matrix(self, console: Console):
        rows = self.payload["rows"]
        table = Table(title=self.payload["name"], show_header=False, box=None)
        for _ in range(len(rows[0]) if rows else 0):
            table.add_column(justify="right")
        for row in rows:
            table.add_row(*row)
        console.print(table)

    def _render_series(self, console: Console):
        series = TruncatedSeries([Fraction(c) for c in self.payload["coeffs"]], self.payload["order"])
        text = series.to_polynomial().render()
        label = self.payload.get("label")
        head = f"{label} = " if label else ""
        console.print(f"{head}{text} + O(x^{self.payload['order'] + 1})")

    def _render_report(self, console: Console):
        table = Table(title="📊 Check report")
        table.add_column("check")
        table.add_column("status")
        table.add_column("cases", justify="right")
        table.add_column("note")
        for report in self.payload["reports"]:
            status = report["status"]
            table.add_row(
                report["check_id"],
                f"{STATUS_ICONS[status]} {status}",
                str(report["cases"]),
                report.get("message", ""),
            )
        console.print(table)
        summary = self.payload["summary"]
        console.print(" ".join(f"{STATUS_ICONS[k]} {k}: {v}" for k, v in summary.items()))


# --- costruttori di documenti ------------------------------------------------------

def polynomial_doc(p: Polynomial, label: Optional[str] = None) -> OutputDoc:
    payload: Dict[str, Any] = {"coeffs": render_exact(p)}
    if label:
        payload["label"] = label
    return OutputDoc("polynomial", payload)


def numerator_doc(result: Any, label: Optional[str] = None) -> OutputDoc:
    payload = result.to_dict()
    payload["coeffs"] = render_exact(result.numerator)
    if label:
        payload["label"] = label
    return OutputDoc("numerator", payload)


def matrix_doc(name: str, operator: FiniteOperator) -> OutputDoc:
    return OutputDoc("matrix", {"name": name, "dim": operator.dim, "rows": operator.render_rows()})


def series_doc(series: TruncatedSeries, label: Optional[str] = None) -> OutputDoc:
    payload: Dict[str, Any] = {"order": series.order, "coeffs": render_exact(series)}
    if label:
        payload["label"] = label
    return OutputDoc("series", payload)


def report_doc(reports: Sequence[Any], params: Dict[str, Any], include_elapsed: bool = False) -> OutputDoc:
    summary: Dict[str, int] = {status: 0 for status in STATUS_ICONS}
    entries: List[Dict[str, Any]] = []
    for report in reports:
        entry = report.to_dict(include_elapsed=include_elapsed)
        summary[entry["status"]] += 1
        entries.append(entry)
    return OutputDoc("report", {"params": params, "reports": entries, "summary": summary})
