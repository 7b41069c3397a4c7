from __future__ import annotations

import io
import json
from pathlib import Path

import pandas as pd

from src.application.contracts import OutputFormat
from src.application.dto import Report
from src.application.ports import ReportWriterPort
from src.infrastructure.storage import atomic_write_text


class FileReportWriter(ReportWriterPort):
    """JSON documents with sorted keys, CSV tables through pandas."""

    def render(self, report: Report, output_format: OutputFormat) -> str:
        if output_format is OutputFormat.CSV:
            buffer = io.StringIO()
            pd.DataFrame(report.to_rows()).to_csv(buffer, index=False, lineterminator="\n")
            return buffer.getvalue()
        return json.dumps(report.to_payload(), sort_keys=True, indent=2, allow_nan=False) + "\n"

    def write(self, report: Report, path: str | Path, output_format: OutputFormat) -> Path:
        text = self.render(report, output_format)
        return atomic_write_text(Path(path), text)
