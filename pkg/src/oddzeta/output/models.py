"""Serialisable report models; every number is carried as a decimal string."""

from datetime import datetime, timezone
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field

UTC = timezone.utc

from ..identities import Residual, ValidityEntry
from ..numeric import format_decimal, is_complex
from ..series import BenchRow, ConvergenceTrace, EvalReport, RecurrenceCoefficients

SCHEMA_VERSION = "1"
BOUND_DIGITS = 6


def format_number(value: Any, digits: int) -> str:
    """Decimal text for a Real, or ``re+imj`` for a Complex."""
    if is_complex(value):
        real = format_decimal(value.real, digits)
        imag = format_decimal(value.imag, digits)
        return f"{real}{imag if imag.startswith('-') else '+' + imag}j"
    return format_decimal(value, digits)


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class EvalRecord(_Record):
    """A certified ζ(2r+1) value."""

    kind: Literal["eval"] = "eval"
    family: str
    r: int
    argument: int = Field(description="2r+1")
    value: str
    terms_used: int
    tail_bound: str
    certified_digits: int
    target_digits: int


class ResidualRecord(_Record):
    """One identity case with both sides and the budget it is judged against."""

    kind: Literal["residual"] = "residual"
    case_id: str
    identity: str
    r: int | None = None
    s: str | None = None
    x: str | None = None
    N: int
    K: int
    lhs: str
    rhs: str
    abs_residual: str
    expected_bound: str
    passed: bool
    gating: bool
    notes: list[str] = Field(default_factory=list)
    cesaro_residual: str | None = None
    cesaro_halved: bool | None = None


class TraceRecord(_Record):
    """Decay measurement of one series over a k range."""

    kind: Literal["trace"] = "trace"
    family: str
    r: int
    k_start: int
    k_stop: int
    raw_ratio: str
    fitted_ratio: str
    expected_ratio: str
    relative_deviation: str
    term_magnitudes: list[str] = Field(default_factory=list)


class BenchRecord(_Record):
    """Terms and wall time one family needs for the target digits."""

    kind: Literal["bench"] = "bench"
    family: str
    r: int
    digits: int
    terms_used: int
    tail_bound: str
    wall_ms: str
    value: str
    certified_digits: int


class CoefficientRecord(_Record):
    """One exact rational of a recurrence, e.g. the π^(2j)·ζ(2r+1-2j) multiplier."""

    kind: Literal["coefficient"] = "coefficient"
    r: int
    m: int
    term: str
    coefficient: str


class ValidityRecord(_Record):
    """Where an identity holds."""

    kind: Literal["validity"] = "validity"
    identity: str
    parameter: str
    interval: str
    s_condition: str | None = None
    note: str = ""


ResultRecord = Annotated[
    EvalRecord | ResidualRecord | TraceRecord | BenchRecord | CoefficientRecord | ValidityRecord,
    Field(discriminator="kind"),
]


class Report(BaseModel):
    """
    Top-level document written by every CLI verb.

    Attributes:
        schema_version: Format version, currently "1"
        command: The command line that produced the report
        results: Records in the order they were requested
        timestamp: UTC creation time, the only field that varies between
            identical runs
    """

    model_config = ConfigDict(extra="forbid")

    schema_version: Literal["1"] = SCHEMA_VERSION
    command: str
    results: list[ResultRecord] = Field(default_factory=list)
    timestamp: str = Field(default_factory=lambda: datetime.now(UTC).isoformat())

    @property
    def kinds(self) -> list[str]:
        """Record kinds present, in first-appearance order."""
        seen: list[str] = []
        for record in self.results:
            if record.kind not in seen:
                seen.append(record.kind)
        return seen


def eval_record(report: EvalReport) -> EvalRecord:
    return EvalRecord(
        family=report.family.value,
        r=report.r,
        argument=report.argument,
        value=format_decimal(report.value, max(1, report.certified_digits)),
        terms_used=report.terms_used,
        tail_bound=format_decimal(report.tail_bound, BOUND_DIGITS),
        certified_digits=report.certified_digits,
        target_digits=report.target_digits,
    )


def residual_record(residual: Residual, digits: int) -> ResidualRecord:
    """Serialise a residual; both sides are written with ``digits`` digits."""
    case = residual.case
    return ResidualRecord(
        case_id=case.case_id,
        identity=case.identity.value,
        r=case.r,
        s=None if case.s is None else str(case.s),
        x=None if case.x is None else str(case.x),
        N=case.N,
        K=case.K,
        lhs=format_number(residual.lhs, digits),
        rhs=format_number(residual.rhs, digits),
        abs_residual=format_decimal(residual.abs_residual, BOUND_DIGITS),
        expected_bound=format_decimal(residual.expected_bound, BOUND_DIGITS),
        passed=residual.passed,
        gating=residual.gating,
        notes=list(residual.notes),
        cesaro_residual=(
            None
            if residual.cesaro_residual is None
            else format_decimal(residual.cesaro_residual, BOUND_DIGITS)
        ),
        cesaro_halved=residual.cesaro_halved,
    )


def trace_record(trace: ConvergenceTrace) -> TraceRecord:
    return TraceRecord(
        family=trace.family.value,
        r=trace.r,
        k_start=trace.k_start,
        k_stop=trace.k_stop,
        raw_ratio=format_decimal(trace.raw_ratio, BOUND_DIGITS),
        fitted_ratio=format_decimal(trace.fitted_ratio, BOUND_DIGITS),
        expected_ratio=str(trace.expected_ratio),
        relative_deviation=format_decimal(trace.relative_deviation(), BOUND_DIGITS),
        term_magnitudes=[format_decimal(t, BOUND_DIGITS) for t in trace.term_magnitudes],
    )


def bench_record(row: BenchRow) -> BenchRecord:
    return BenchRecord(
        family=row.family.value,
        r=row.r,
        digits=row.digits,
        terms_used=row.terms_used,
        tail_bound=format_decimal(row.tail_bound, BOUND_DIGITS),
        wall_ms=f"{row.wall_ms:.3f}",
        value=format_decimal(row.value, max(1, row.certified_digits)),
        certified_digits=row.certified_digits,
    )


def coefficient_records(coeffs: RecurrenceCoefficients) -> list[CoefficientRecord]:
    """
    The exact rationals of one recurrence.

    Lead terms are the collected multipliers of π^(2j)·ζ(2r+1-2j); the last
    record is the scale of π^(2r) times the ζ(2k) tail.
    """
    records = [
        CoefficientRecord(
            r=coeffs.r,
            m=coeffs.m,
            term=f"pi^{2 * j}*zeta({2 * coeffs.r + 1 - 2 * j})",
            coefficient=str(c),
        )
        for j, c in coeffs.collected().items()
    ]
    if coeffs.r == 1 and coeffs.log_coeff and coeffs.log_argument != 1:
        records.append(
            CoefficientRecord(
                r=coeffs.r,
                m=coeffs.m,
                term=f"pi^2*ln({coeffs.log_argument})",
                coefficient=str(coeffs.log_coeff),
            )
        )
    records.append(
        CoefficientRecord(
            r=coeffs.r,
            m=coeffs.m,
            term=f"pi^{2 * coeffs.r}*tail",
            coefficient=str(coeffs.tail_scale),
        )
    )
    return records


def validity_record(entry: ValidityEntry) -> ValidityRecord:
    return ValidityRecord(
        identity=entry.identity.value,
        parameter=entry.parameter,
        interval=entry.interval_text(),
        s_condition=entry.s_condition,
        note=entry.note,
    )
