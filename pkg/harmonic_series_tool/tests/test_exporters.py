"""
Tests for the text and JSON report exporters.
"""
import json

import pytest

from harmonic_series_tool.config.models import ReportStatus, VerificationReport
from harmonic_series_tool.config.settings import OutputMode
from harmonic_series_tool.exporters import (JsonReportExporter, TextReportExporter,
                                            format_report, parse_report_json)

REPORT_FIELDS = {'id', 'params', 'lhs', 'rhs', 'matched_digits', 'method', 'elapsed_ms', 'status'}


def _reports():
    return [
        VerificationReport('THM_HARDY_ALT', {'k': '2', 'x': '7/2'},
                           '0.20103407', '0.20103407', 31, 'cvz/expression', 12,
                           ReportStatus.PASS),
        VerificationReport('THM_S1', {}, None, None, 0, '', 3, ReportStatus.ERROR),
    ]


def test_json_empty_report():
    assert format_report([], OutputMode.JSON) == "[]"
    assert parse_report_json("[]") == []


def test_json_fields_and_round_trip():
    text = format_report(_reports(), 'json')
    data = json.loads(text)
    assert [set(item) for item in data] == [REPORT_FIELDS, REPORT_FIELDS]
    assert data[0]['params'] == {'k': '2', 'x': '7/2'}
    assert data[0]['lhs'] == '0.20103407'
    assert data[1]['lhs'] is None
    assert data[1]['status'] == 'error'
    assert parse_report_json(text) == _reports()


def test_json_rejects_malformed_documents():
    with pytest.raises(ValueError):
        parse_report_json('{"id": "THM_S1"}')
    with pytest.raises(ValueError):
        parse_report_json('[{"id": "THM_S1"}]')


def test_text_table():
    exporter = TextReportExporter()
    text = exporter.format(_reports())
    lines = text.splitlines()
    assert lines[0].split() == ['ID', 'Params', 'Matched', 'Status', 'Method', 'ms']
    assert 'THM_HARDY_ALT' in lines[1] and 'k=2, x=7/2' in lines[1]
    assert exporter.summary_line(_reports()) == "1/2 passed"
    assert format_report(_reports()) == text


def test_exporters_write_files(tmp_path):
    json_path = tmp_path / "report.json"
    JsonReportExporter().export(json_path, _reports())
    assert parse_report_json(json_path.read_text(encoding='utf-8')) == _reports()

    text_path = tmp_path / "report.txt"
    TextReportExporter().export(text_path, _reports())
    assert 'THM_S1' in text_path.read_text(encoding='utf-8')
