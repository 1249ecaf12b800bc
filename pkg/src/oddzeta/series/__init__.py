"""Rapidly converging series for ζ(2r+1), their coefficients, bounds and telemetry."""

from .bench import BenchRow, bench, terms_ordering_holds
from .evaluators import (
    EvalReport,
    SeriesSum,
    ck_recurrence,
    ewell_zeta3,
    run_ladder,
    series_term,
    tail_bound,
    zeta3_family,
    zeta_odd,
    zeta_odd_ladder,
)
from .families import (
    RecurrenceCoefficients,
    SeriesFamily,
    TailKernel,
    ck_coefficients,
    ewell_coefficients,
    family_coefficients,
    recurrence_coefficients,
    zeta3_coefficients,
)
from .trace import ConvergenceTrace, convergence_trace

__all__ = [
    "BenchRow",
    "ConvergenceTrace",
    "EvalReport",
    "RecurrenceCoefficients",
    "SeriesFamily",
    "SeriesSum",
    "TailKernel",
    "bench",
    "ck_coefficients",
    "ck_recurrence",
    "convergence_trace",
    "ewell_coefficients",
    "ewell_zeta3",
    "family_coefficients",
    "recurrence_coefficients",
    "run_ladder",
    "series_term",
    "tail_bound",
    "terms_ordering_holds",
    "zeta3_coefficients",
    "zeta3_family",
    "zeta_odd",
    "zeta_odd_ladder",
]
