"""Output formatters for oddzeta reports."""

import csv
import io
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from ..errors import ConfigurationError
from .models import Report, ResidualRecord

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "markdown")

# bench rows keep exactly these columns in CSV
BENCH_COLUMNS = ["family", "r", "digits", "terms_used", "tail_bound", "wall_ms"]


def _flat_rows(report: Report, kind: str) -> list[dict[str, Any]]:
    """Records of one kind as flat dicts without the discriminator."""
    rows = []
    for record in report.results:
        if record.kind != kind:
            continue
        row = record.model_dump(exclude={"kind"})
        for key, value in row.items():
            if isinstance(value, list):
                row[key] = "; ".join(str(v) for v in value)
            elif value is None:
                row[key] = ""
        rows.append(row)
    return rows


def _columns(kind: str, rows: list[dict[str, Any]]) -> list[str]:
    if kind == "bench":
        return BENCH_COLUMNS
    columns = list(rows[0])
    if kind == "trace":
        columns.remove("term_magnitudes")
    return columns


class OutputFormatter(ABC):
    """Base class for output formatters."""

    def __init__(self, report: Report) -> None:
        """
        Initialize formatter.

        Args:
            report: Report to render
        """
        self.report = report

    @abstractmethod
    def render(self) -> str:
        """Report as text."""


class JSONFormatter(OutputFormatter):
    """JSON output formatter; parsing and re-dumping gives the same bytes."""

    def render(self) -> str:
        return self.report.model_dump_json(indent=2) + "\n"


class CSVFormatter(OutputFormatter):
    """
    CSV output formatter.

    Each record kind becomes its own header-plus-rows block; blocks are
    separated by a blank line. Numeric cells are the same strings the JSON
    report carries.
    """

    def render(self) -> str:
        buffer = io.StringIO()
        for i, kind in enumerate(self.report.kinds):
            if i:
                buffer.write("\n")
            rows = _flat_rows(self.report, kind)
            writer = csv.DictWriter(
                buffer,
                fieldnames=_columns(kind, rows),
                extrasaction="ignore",
                lineterminator="\n",
            )
            writer.writeheader()
            writer.writerows(rows)
        return buffer.getvalue()


class MarkdownFormatter(OutputFormatter):
    """Markdown report formatter."""

    def render(self) -> str:
        report = self.report
        lines = [
            "# oddzeta report\n\n",
            f"**Command:** `{report.command}`\n",
            f"**Generated:** {report.timestamp}\n",
            f"**Schema:** {report.schema_version}\n\n",
        ]
        residuals = [r for r in report.results if isinstance(r, ResidualRecord)]
        if residuals:
            failed = [r for r in residuals if r.gating and not r.passed]
            lines.append("## Summary\n\n")
            lines.append(f"- **Cases:** {len(residuals)}\n")
            lines.append(f"- **Failed:** {len(failed)}\n\n")

        for kind in report.kinds:
            rows = _flat_rows(report, kind)
            columns = _columns(kind, rows)
            lines.append(f"## {kind.title()}\n\n")
            lines.append("| " + " | ".join(columns) + " |\n")
            lines.append("|" + "---|" * len(columns) + "\n")
            for row in rows:
                cells = [str(row[c]).replace("|", "\\|") for c in columns]
                lines.append("| " + " | ".join(cells) + " |\n")
            lines.append("\n")
        return "".join(lines)


_FORMATTERS: dict[str, type[OutputFormatter]] = {
    "json": JSONFormatter,
    "csv": CSVFormatter,
    "markdown": MarkdownFormatter,
}


def format_report(report: Report, fmt: str, output_path: str | Path | None = None) -> str:
    """
    Render a report and optionally write it.

    Args:
        report: Report to render
        fmt: One of 'json', 'csv', 'markdown'
        output_path: File to write; nothing is written when omitted

    Returns:
        Rendered text

    Raises:
        ConfigurationError: For an unknown format
    """
    try:
        formatter = _FORMATTERS[fmt](report)
    except KeyError as e:
        raise ConfigurationError(
            f"unknown format {fmt!r}; valid formats are {', '.join(FORMATS)}"
        ) from e
    text = formatter.render()
    if output_path is not None:
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.debug("wrote %s report to %s", fmt, path)
    return text
