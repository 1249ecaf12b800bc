"""Tests for report models and output formatters."""

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

import pytest

from oddzeta.errors import ConfigurationError
from oddzeta.identities import IdentityId, validity_entry, verify_lemma_3_4
from oddzeta.numeric import make_context
from oddzeta.output import (
    BENCH_COLUMNS,
    Report,
    bench_record,
    coefficient_records,
    eval_record,
    format_number,
    format_report,
    residual_record,
    trace_record,
    validity_record,
)
from oddzeta.series import (
    BenchRow,
    SeriesFamily,
    convergence_trace,
    recurrence_coefficients,
    zeta3_coefficients,
    zeta3_family,
)


@pytest.fixture
def sample_report() -> Report:
    """A report holding one record of every kind."""
    ctx = make_context(20)
    zeta3 = zeta3_family(6, ctx)
    bench_row = BenchRow(
        family=SeriesFamily.M6,
        r=1,
        digits=20,
        terms_used=zeta3.terms_used,
        tail_bound=zeta3.tail_bound,
        wall_ms=1.25,
        value=zeta3.value,
        certified_digits=zeta3.certified_digits,
    )
    residual = verify_lemma_3_4(Fraction(1, 3), 40, ctx)
    trace = convergence_trace(SeriesFamily.M4, 1, (5, 10), ctx)
    return Report(
        command="oddzeta compute zeta3 --family m6 --digits 20",
        results=[
            eval_record(zeta3),
            residual_record(residual, 20),
            trace_record(trace),
            bench_record(bench_row),
            *coefficient_records(recurrence_coefficients(2, 3)),
            validity_record(validity_entry(IdentityId.T4_1)),
        ],
    )


class TestModels:
    """Tests for the record converters."""

    def test_kinds_in_order(self, sample_report: Report) -> None:
        """Kinds are listed in first-appearance order."""
        assert sample_report.kinds == [
            "eval",
            "residual",
            "trace",
            "bench",
            "coefficient",
            "validity",
        ]

    def test_eval_value_text(self, sample_report: Report) -> None:
        """The value carries the certified digits."""
        record = sample_report.results[0]
        assert record.kind == "eval"
        assert record.value.startswith("1.202056903159594285")
        assert record.argument == 3

    def test_coefficient_terms(self) -> None:
        """Lead terms, then the tail scale."""
        records = coefficient_records(recurrence_coefficients(2, 3))
        assert [(r.term, r.coefficient) for r in records] == [
            ("pi^2*zeta(3)", "41/363"),
            ("pi^4*tail", "8/363"),
        ]

    def test_log_term_for_zeta3(self) -> None:
        """The ζ(3) series at m = 4 records its logarithm."""
        terms = [r.term for r in coefficient_records(zeta3_coefficients(4))]
        assert terms == ["pi^2*ln(2)", "pi^2*tail"]

    def test_validity_record(self) -> None:
        """Intervals are rendered as text."""
        record = validity_record(validity_entry(IdentityId.T3_5_COS))
        assert record.interval == "(0, 2]"
        assert record.parameter == "x/c"

    def test_complex_number(self) -> None:
        """Complex values are written as re+imj."""
        ctx = make_context(10)
        assert format_number(ctx.mp.mpc(1, -2), 3) == "1.00e+0-2.00e+0j"
        assert format_number(ctx.mp.mpc(1, 2), 3) == "1.00e+0+2.00e+0j"

    def test_schema_version(self, sample_report: Report) -> None:
        """Reports are stamped with schema version 1."""
        assert sample_report.schema_version == "1"


class TestJSONFormatter:
    """Tests for JSON output."""

    def test_round_trip(self, sample_report: Report) -> None:
        """Parsing and re-rendering gives identical bytes."""
        text = format_report(sample_report, "json")
        again = format_report(Report.model_validate_json(text), "json")
        assert again == text

    def test_writes_file(self, sample_report: Report, tmp_path: Path) -> None:
        """The output path is created with parents."""
        path = tmp_path / "nested" / "report.json"
        text = format_report(sample_report, "json", path)
        assert path.read_text(encoding="utf-8") == text
        data = json.loads(text)
        assert data["schema_version"] == "1"
        assert data["results"][0]["kind"] == "eval"


class TestCSVFormatter:
    """Tests for CSV output."""

    def test_blocks_per_kind(self, sample_report: Report) -> None:
        """Each kind is a header-plus-rows block separated by a blank line."""
        blocks = format_report(sample_report, "csv").split("\n\n")
        assert len(blocks) == len(sample_report.kinds)
        assert blocks[0].splitlines()[0].startswith("family,r,argument,value")

    def test_bench_columns(self, sample_report: Report) -> None:
        """Bench rows carry exactly the benchmark columns."""
        blocks = format_report(sample_report, "csv").split("\n\n")
        rows = list(csv.DictReader(io.StringIO(blocks[3])))
        assert list(rows[0]) == BENCH_COLUMNS
        assert rows[0]["wall_ms"] == "1.250"

    def test_trace_drops_magnitudes(self, sample_report: Report) -> None:
        """The per-term list stays in JSON only."""
        trace_block = format_report(sample_report, "csv").split("\n\n")[2]
        assert "term_magnitudes" not in trace_block.splitlines()[0]

    def test_numbers_match_json(self, sample_report: Report) -> None:
        """Every numeric string is identical across formats."""
        data = json.loads(format_report(sample_report, "json"))
        csv_text = format_report(sample_report, "csv")
        markdown = format_report(sample_report, "markdown")
        eval_json = data["results"][0]
        residual_json = data["results"][1]
        for value in (eval_json["value"], residual_json["lhs"], residual_json["abs_residual"]):
            assert value in csv_text
            assert value in markdown


class TestMarkdownFormatter:
    """Tests for Markdown output."""

    def test_summary(self, sample_report: Report) -> None:
        """Residual reports get a summary with the failure count."""
        text = format_report(sample_report, "markdown")
        assert text.startswith("# oddzeta report")
        assert "- **Cases:** 1" in text
        assert "- **Failed:** 0" in text
        assert "## Bench" in text

    def test_no_summary_without_residuals(self) -> None:
        """Reports without residuals have no summary."""
        report = Report(
            command="oddzeta table",
            results=coefficient_records(recurrence_coefficients(2, 6)),
        )
        text = format_report(report, "markdown")
        assert "## Summary" not in text
        assert "| 2 | 6 | pi^2*zeta(3) | 8/87 |" in text


class TestFormatReport:
    """Tests for format dispatch."""

    def test_unknown_format(self, sample_report: Report) -> None:
        """Unknown formats are configuration errors."""
        with pytest.raises(ConfigurationError, match="unknown format"):
            format_report(sample_report, "xml")
