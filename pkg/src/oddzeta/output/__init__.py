"""Report models and their JSON, CSV and Markdown renderings."""

from .formatters import (
    BENCH_COLUMNS,
    FORMATS,
    CSVFormatter,
    JSONFormatter,
    MarkdownFormatter,
    OutputFormatter,
    format_report,
)
from .models import (
    SCHEMA_VERSION,
    BenchRecord,
    CoefficientRecord,
    EvalRecord,
    Report,
    ResidualRecord,
    TraceRecord,
    ValidityRecord,
    bench_record,
    coefficient_records,
    eval_record,
    format_number,
    residual_record,
    trace_record,
    validity_record,
)

__all__ = [
    "BENCH_COLUMNS",
    "FORMATS",
    "SCHEMA_VERSION",
    "BenchRecord",
    "CSVFormatter",
    "CoefficientRecord",
    "EvalRecord",
    "JSONFormatter",
    "MarkdownFormatter",
    "OutputFormatter",
    "Report",
    "ResidualRecord",
    "TraceRecord",
    "ValidityRecord",
    "bench_record",
    "coefficient_records",
    "eval_record",
    "format_number",
    "format_report",
    "residual_record",
    "trace_record",
    "validity_record",
]
