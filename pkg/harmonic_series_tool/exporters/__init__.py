"""
Exporters Package

Report formatting for verification runs: an aligned text table rendered
through pandas, and a JSON array whose numbers are decimal strings.
"""
import json
import logging
from pathlib import Path
from typing import List, Union

from ..config.models import VerificationReport, reports_to_dataframe
from ..config.settings import OutputMode, get_settings

logger = logging.getLogger(__name__)


class TextReportExporter:
    """
    Export verification reports as an aligned table.

    Columns: ID, Params, Matched, Status, Method, ms
    """

    def format(self, reports: List[VerificationReport]) -> str:
        df = reports_to_dataframe(reports)
        if df.empty:
            return df.to_string(index=False)
        return df.to_string(index=False, justify='left')

    def summary_line(self, reports: List[VerificationReport]) -> str:
        passed = sum(1 for r in reports if r.passed)
        return f"{passed}/{len(reports)} passed"

    def export(self, filepath: Union[str, Path], reports: List[VerificationReport]):
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(self.format(reports))
            f.write("\n")
        logger.info(f"Wrote text report ({len(reports)} rows) to {filepath}")


class JsonReportExporter:
    """
    Export verification reports as a JSON array.

    Each element has exactly the fields id, params, lhs, rhs,
    matched_digits, method, elapsed_ms and status. Values and parameters
    are strings so no digit passes through a binary float.
    """

    def __init__(self):
        self.indent = get_settings().output.json_indent

    def format(self, reports: List[VerificationReport]) -> str:
        if not reports:
            return "[]"
        return json.dumps([r.to_dict() for r in reports], indent=self.indent)

    def export(self, filepath: Union[str, Path], reports: List[VerificationReport]):
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(self.format(reports))
            f.write("\n")
        logger.info(f"Wrote JSON report ({len(reports)} records) to {filepath}")


def format_report(reports: List[VerificationReport], mode: Union[OutputMode, str] = OutputMode.TEXT) -> str:
    """
    Render reports as text or JSON.

    Args:
        reports: Verification reports
        mode: OutputMode or its value ('text' / 'json')

    Returns:
        Document text
    """
    mode = OutputMode(mode)
    if mode == OutputMode.JSON:
        return JsonReportExporter().format(reports)
    return TextReportExporter().format(reports)


def parse_report_json(text: str) -> List[VerificationReport]:
    """
    Parse a JSON report document back into reports.

    Raises:
        ValueError: Malformed document or missing fields
    """
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("report document must be a JSON array")
    try:
        return [VerificationReport.from_dict(item) for item in data]
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed report record: {e}") from e


__all__ = [
    'TextReportExporter',
    'JsonReportExporter',
    'format_report',
    'parse_report_json',
]
