"""Convergence telemetry for the ζ(2k) tail series."""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ConfigurationError
from ..numeric import PrecisionContext, Real
from .evaluators import series_term
from .families import SeriesFamily, family_coefficients


@dataclass(frozen=True)
class ConvergenceTrace:
    """
    Term magnitudes of one series over a k range and their decay rate.

    Attributes:
        family: Series family
        r: Order
        k_start: First traced index
        k_stop: Last traced index (inclusive)
        term_magnitudes: |term_k| for k_start..k_stop
        fitted_ratio: Geometric-mean ratio after removing the k^-p factor
        raw_ratio: Plain geometric mean of successive ratios
        expected_ratio: m^-2
    """

    family: SeriesFamily
    r: int
    k_start: int
    k_stop: int
    term_magnitudes: tuple[Real, ...]
    fitted_ratio: Real
    raw_ratio: Real
    expected_ratio: Fraction

    def relative_deviation(self) -> Real:
        """|fitted_ratio / expected_ratio - 1|."""
        return abs(self.fitted_ratio / float(self.expected_ratio) - 1)


def convergence_trace(
    family: SeriesFamily, r: int, k_range: tuple[int, int], ctx: PrecisionContext
) -> ConvergenceTrace:
    """
    Measure how fast a family's terms decay over ``k_range``.

    Successive ratios telescope, so both means come from the endpoints:
    raw = (|t_b| / |t_a|)^(1/(b-a)), fitted additionally multiplies each
    magnitude by k^p where kernel(k) ~ k^-p.

    Args:
        family: Series family
        r: Order
        k_range: (k_start, k_stop), 1 <= k_start < k_stop
        ctx: Precision context

    Returns:
        ConvergenceTrace

    Raises:
        ConfigurationError: If the range is empty or starts below 1
    """
    k_start, k_stop = k_range
    if k_start < 1 or k_stop <= k_start:
        raise ConfigurationError(f"k_range must satisfy 1 <= start < stop, got {k_range}")

    coeffs = family_coefficients(family, r)
    mp = ctx.mp
    magnitudes = tuple(abs(series_term(family, r, k, ctx)) for k in range(k_start, k_stop + 1))
    steps = k_stop - k_start
    first, last = magnitudes[0], magnitudes[-1]
    raw = mp.root(last / first, steps)
    p = coeffs.kernel.polynomial_order(r)
    fitted = raw * mp.root(mp.power(mp.mpf(k_stop) / k_start, p), steps)

    return ConvergenceTrace(
        family=family,
        r=r,
        k_start=k_start,
        k_stop=k_stop,
        term_magnitudes=magnitudes,
        fitted_ratio=fitted,
        raw_ratio=raw,
        expected_ratio=Fraction(1, coeffs.m**2),
    )
