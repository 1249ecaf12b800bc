"""Evaluators for ζ(2r+1) with adaptive truncation and rigorous tail bounds."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ConfigurationError, PrecisionShortfallError
from ..numeric import CERTIFY_EXTRA_BITS, PrecisionContext, Real, agreeing_digits
from ..reference import TWIST_MODULI, zeta_even_coefficient
from .families import RecurrenceCoefficients, SeriesFamily, family_coefficients

logger = logging.getLogger(__name__)

# rational upper bound for ζ(2) = π²/6 ≈ 1.644934
ZETA2_UPPER = Fraction(1645, 1000)
ZETA0 = Fraction(-1, 2)
TERMS_PER_DIGIT_CAP = 10
STOP_MARGIN_DIGITS = 2


@dataclass(frozen=True)
class SeriesSum:
    """One uncertified evaluation: value, terms summed and total error bound."""

    value: Real
    terms_used: int
    tail_bound: Real


@dataclass(frozen=True)
class EvalReport:
    """
    Certified value of ζ(2r+1) from one series family.

    Attributes:
        family: Series family used
        r: Order; value approximates ζ(2r+1)
        value: Value from the higher-precision run
        terms_used: Tail-series terms summed
        tail_bound: Truncation bound plus propagated input uncertainty
        certified_digits: Digits vouched for by agreement and the bound
        target_digits: Digits requested
    """

    family: SeriesFamily
    r: int
    value: Real
    terms_used: int
    tail_bound: Real
    certified_digits: int
    target_digits: int

    @property
    def argument(self) -> int:
        return 2 * self.r + 1


def _zeta_coefficient(k: int) -> Fraction:
    return ZETA0 if k == 0 else zeta_even_coefficient(k)


def _tail_bound(coeffs: RecurrenceCoefficients, k_start: int, ctx: PrecisionContext) -> Real:
    """ζ(2)·|tail_scale|·π^(2r)·kernel(k_start)·m^(-2 k_start) / (1 - m^-2)."""
    m2 = Fraction(coeffs.m) ** 2
    rational = (
        ZETA2_UPPER
        * abs(coeffs.tail_scale)
        * coeffs.kernel_value(k_start)
        / m2**k_start
        / (1 - 1 / m2)
    )
    return ctx.real(rational) * ctx.pi ** (2 * coeffs.r)


def tail_bound(family: SeriesFamily, r: int, k_start: int, ctx: PrecisionContext) -> Real:
    """
    Rigorous majorant of the tail Σ_{k>=k_start} of a family's ζ(2k) series.

    Uses 1 < ζ(2k) <= ζ(2) for k >= 1, a non-increasing kernel and geometric
    closure with ratio m^-2.

    Args:
        family: Series family
        r: Order
        k_start: First omitted index, >= 1
        ctx: Precision context

    Returns:
        Upper bound on the absolute remainder, scaled like the value
    """
    if k_start < 1:
        raise ConfigurationError(f"k_start must be >= 1, got {k_start}")
    return _tail_bound(family_coefficients(family, r), k_start, ctx)


def series_term(family: SeriesFamily, r: int, k: int, ctx: PrecisionContext) -> Real:
    """Term k of the scaled tail series, tail_scale·π^(2r)·kernel(k)·ζ(2k)/m^(2k)."""
    coeffs = family_coefficients(family, r)
    rational = coeffs.tail_scale * coeffs.term_rational(k, _zeta_coefficient(k))
    return ctx.real(rational) * ctx.pi ** (2 * (r + k))


def _lower_value(lower: Sequence[SeriesSum], r: int, j: int) -> SeriesSum:
    # lower[i] holds ζ(2i+3)
    return lower[r - j - 1]


def _evaluate(
    coeffs: RecurrenceCoefficients,
    family: SeriesFamily,
    lower: Sequence[SeriesSum],
    ctx: PrecisionContext,
) -> SeriesSum:
    mp = ctx.mp
    pi = ctx.pi
    pi2 = pi * pi
    r = coeffs.r

    prefix = mp.mpf(0)
    propagated = mp.mpf(0)
    if r == 1 and coeffs.log_coeff and coeffs.log_argument != 1:
        prefix += ctx.real(coeffs.log_coeff) * pi2 * mp.log(coeffs.log_argument)
    for j, c in coeffs.collected().items():
        below = _lower_value(lower, r, j)
        weight = ctx.real(c) * pi ** (2 * j)
        prefix += weight * ctx.number(below.value)
        propagated += abs(weight) * ctx.number(below.tail_bound)

    scale = ctx.real(coeffs.tail_scale) * pi ** (2 * r)
    stop = mp.mpf(10) ** (-(ctx.target_digits + STOP_MARGIN_DIGITS))
    cap = TERMS_PER_DIGIT_CAP * max(ctx.target_digits, 1)

    partial = mp.mpf(0)
    pi_power = mp.mpf(1)
    k = 0
    while True:
        if k >= cap:
            raise PrecisionShortfallError(
                f"{family.value} r={r}: no convergence to {ctx.target_digits} digits "
                f"within {cap} terms"
            )
        partial += ctx.real(coeffs.term_rational(k, _zeta_coefficient(k))) * pi_power
        pi_power *= pi2
        k += 1
        bound = _tail_bound(coeffs, k, ctx)
        if bound < stop * abs(prefix + scale * partial):
            break

    value = prefix + scale * partial
    logger.debug("%s r=%d stopped after %d terms, bound %s", family.value, r, k, mp.nstr(bound, 3))
    return SeriesSum(value=value, terms_used=k, tail_bound=bound + propagated)


def run_ladder(family: SeriesFamily, r_max: int, ctx: PrecisionContext) -> list[SeriesSum]:
    """
    Uncertified ζ(3), ζ(5), ..., ζ(2r_max+1) from one family at one precision.

    Args:
        family: Series family used at every level
        r_max: Highest order, >= 1
        ctx: Precision context

    Returns:
        One SeriesSum per order
    """
    if r_max < 1:
        raise ConfigurationError(f"r_max must be >= 1, got {r_max}")
    if family is SeriesFamily.EWELL and r_max > 1:
        raise ConfigurationError("Ewell's formula only computes ζ(3); use the ck family")
    sums: list[SeriesSum] = []
    for r in range(1, r_max + 1):
        sums.append(_evaluate(family_coefficients(family, r), family, sums, ctx))
    return sums


def _bound_digits(value: Real, bound: Real, limit: int, ctx: PrecisionContext) -> int:
    """Largest d <= limit with bound < 10^-d·|value|."""
    mp = ctx.mp
    if not bound:
        return limit
    ratio = abs(value) / bound
    if ratio <= 1:
        return 0
    d = min(limit, int(mp.floor(mp.log10(ratio))))
    while d > 0 and bound >= mp.mpf(10) ** (-d) * abs(value):
        d -= 1
    return max(0, d)


def _report(
    family: SeriesFamily,
    r: int,
    low: SeriesSum,
    high: SeriesSum,
    ctx: PrecisionContext,
    high_ctx: PrecisionContext,
) -> EvalReport:
    agreement = agreeing_digits(low.value, high.value, ctx.target_digits, high_ctx)
    by_bound = _bound_digits(high.value, high.tail_bound, ctx.target_digits, high_ctx)
    return EvalReport(
        family=family,
        r=r,
        value=high.value,
        terms_used=high.terms_used,
        tail_bound=high.tail_bound,
        certified_digits=min(agreement, by_bound),
        target_digits=ctx.target_digits,
    )


def _certified_single(
    family: SeriesFamily,
    coeffs: RecurrenceCoefficients,
    lower: Sequence[SeriesSum],
    ctx: PrecisionContext,
) -> EvalReport:
    high_ctx = ctx.extended(CERTIFY_EXTRA_BITS)
    low = _evaluate(coeffs, family, lower, ctx)
    high = _evaluate(coeffs, family, lower, high_ctx)
    return _report(family, coeffs.r, low, high, ctx, high_ctx)


def ewell_zeta3(ctx: PrecisionContext) -> EvalReport:
    """
    ζ(3) by Ewell's formula, -(4π²/7) Σ_k ζ(2k) / ((2k+1)(2k+2) 4^k).

    Args:
        ctx: Precision context

    Returns:
        Certified EvalReport
    """
    coeffs = family_coefficients(SeriesFamily.EWELL, 1)
    return _certified_single(SeriesFamily.EWELL, coeffs, [], ctx)


def ck_recurrence(r: int, lower_values: Sequence[EvalReport], ctx: PrecisionContext) -> EvalReport:
    """
    ζ(2r+1) from the finite Cvijović–Klinowski recurrence.

    Args:
        r: Order >= 1
        lower_values: Reports for ζ(3), ..., ζ(2r-1) in order
        ctx: Precision context

    Returns:
        Certified EvalReport; input uncertainty is folded into tail_bound

    Raises:
        ConfigurationError: If r < 1 or lower_values has the wrong length
    """
    if r < 1:
        raise ConfigurationError(f"CK recurrence needs r >= 1, got {r}")
    if len(lower_values) != r - 1:
        raise ConfigurationError(
            f"ζ({2 * r + 1}) needs {r - 1} lower values, got {len(lower_values)}"
        )
    lower = [
        SeriesSum(value=rep.value, terms_used=rep.terms_used, tail_bound=rep.tail_bound)
        for rep in lower_values
    ]
    return _certified_single(SeriesFamily.CK, family_coefficients(SeriesFamily.CK, r), lower, ctx)


def zeta3_family(m: int, ctx: PrecisionContext) -> EvalReport:
    """
    ζ(3) from the series with m^-2k decay.

    Args:
        m: 3, 4 or 6
        ctx: Precision context

    Returns:
        Certified EvalReport

    Raises:
        ConfigurationError: If m is not 3, 4 or 6
    """
    if m not in TWIST_MODULI:
        raise ConfigurationError(f"m must be one of {TWIST_MODULI}, got {m}")
    family = SeriesFamily.for_modulus(m)
    return _certified_single(family, family_coefficients(family, 1), [], ctx)


def zeta_odd_ladder(r_max: int, family: SeriesFamily, ctx: PrecisionContext) -> list[EvalReport]:
    """
    ζ(3), ζ(5), ..., ζ(2r_max+1), each level feeding the next.

    The whole ladder runs at the working precision and again with 64 more
    bits; each level is certified from the two runs and its own bound,
    which includes the propagated uncertainty of every lower value.

    Args:
        r_max: Highest order, >= 1
        family: Family used at every level
        ctx: Precision context

    Returns:
        One EvalReport per order

    Raises:
        PrecisionShortfallError: If any level fails to converge
    """
    high_ctx = ctx.extended(CERTIFY_EXTRA_BITS)
    low = run_ladder(family, r_max, ctx)
    high = run_ladder(family, r_max, high_ctx)
    return [
        _report(family, r, lo, hi, ctx, high_ctx)
        for r, (lo, hi) in enumerate(zip(low, high), start=1)
    ]


def zeta_odd(r: int, family: SeriesFamily, ctx: PrecisionContext) -> EvalReport:
    """Certified ζ(2r+1): the top of the ladder."""
    return zeta_odd_ladder(r, family, ctx)[-1]
