from __future__ import annotations

from pathlib import Path
from typing import Protocol

from src.application.contracts import OutputFormat
from src.application.dto import Report


class ReportWriterPort(Protocol):
    def render(self, report: Report, output_format: OutputFormat) -> str:
        ...

    def write(self, report: Report, path: str | Path, output_format: OutputFormat) -> Path:
        ...
