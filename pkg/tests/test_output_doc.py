# tests/test_output_doc.py
import json
from fractions import Fraction

import pytest
from rich.console import Console

from algebra.exact_core import Polynomial
from algebra.series import TruncatedSeries
from arrays.riordan import ArrayFlavor, SeriesPair, catalan_series, euler_poly, numerator
from arrays.transforms import MatrixName, MatrixTag, build
from utils.output_doc import (
    OutputDoc,
    OutputDocError,
    matrix_doc,
    numerator_doc,
    polynomial_doc,
    render_exact,
    report_doc,
    series_doc,
)
from verify.base_check import CheckReport, CheckStatus


def _rendered(doc: OutputDoc) -> str:
    console = Console(record=True, width=100)
    doc.render(console)
    return console.export_text()


def test_polynomial_json_is_canonical():
    doc = polynomial_doc(euler_poly(3), "A_3")
    assert doc.to_json() == '{"coeffs":["0","1","4","1"],"kind":"polynomial","label":"A_3"}'


def test_from_json_restores_document():
    doc = series_doc(TruncatedSeries([1, Fraction(-1, 2)], 3), "s")
    restored = OutputDoc.from_json(doc.to_json())
    assert restored.to_dict() == doc.to_dict()


def test_render_exact():
    assert render_exact(Polynomial.zero()) == ["0"]
    assert render_exact(Fraction(-3, 4)) == "-3/4"
    assert render_exact({"a": [1, Fraction(1, 2)]}) == {"a": ["1", "1/2"]}
    assert render_exact(True) is True


def test_schema_violations():
    with pytest.raises(OutputDocError):
        OutputDoc("polynomial", {"coeffs": ["1.5"]}).validate()
    with pytest.raises(OutputDocError):
        OutputDoc("nothing", {}).validate()
    with pytest.raises(OutputDocError):
        OutputDoc.from_json("[1, 2]")


def test_numerator_doc(catalan):
    result = numerator(SeriesPair.plain(catalan), ArrayFlavor.ORDINARY, 2)
    data = json.loads(numerator_doc(result, "alpha_2").to_json())
    assert data["denominator_exponent"] == 3
    assert data["residual_ok"] is True
    assert data["residual"] == []
    assert data["index"] == 2


def test_matrix_doc():
    doc = matrix_doc("J_1", build(MatrixName(MatrixTag.J, 1)))
    assert doc.to_dict() == {"kind": "matrix", "name": "J_1", "dim": 2, "rows": [["0", "1"], ["1", "0"]]}
    assert "J_1" in _rendered(doc)


def test_human_rendering():
    assert "A_3 = x + 4x^2 + x^3" in _rendered(polynomial_doc(euler_poly(3), "A_3"))
    assert "O(x^3)" in _rendered(series_doc(catalan_series(2), "C"))


def test_report_doc_summary():
    reports = [
        CheckReport("T1", {}, CheckStatus.PASS, cases=3),
        CheckReport("T2", {}, CheckStatus.FAIL, cases=1, message="1/1 cases failed"),
    ]
    doc = report_doc(reports, {"max_n": 3})
    assert doc.payload["summary"] == {"pass": 1, "fail": 1, "error": 0, "not_run": 0}
    assert "elapsed" not in doc.payload["reports"][0]
    doc.validate()
    assert "T2" in _rendered(doc)
