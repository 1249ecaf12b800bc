"""Digit certification by two-precision agreement, and decimal formatting."""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from mpmath.libmp.libmpf import to_digits_exp

from .context import Complex, PrecisionContext, Real, is_complex

logger = logging.getLogger(__name__)

CERTIFY_EXTRA_BITS = 64
_SPARE_DIGITS = 3


@dataclass(frozen=True)
class DigitClaim:
    """A value together with the number of decimal digits vouched for."""

    value: Real | Complex
    certified_digits: int


def _relative_gap_digits(a: Any, b: Any, limit: int, ctx: PrecisionContext) -> int:
    mp = ctx.mp
    if a == b:
        return limit
    scale = abs(b) if b else abs(a)
    gap = abs(a - b) / scale
    if gap >= 1:
        return 0
    return min(limit, int(mp.floor(-mp.log10(gap))))


def _prefix_digits(a: Real, b: Real, limit: int) -> int:
    if not a or not b:
        return limit if a == b else 0
    sign_a, digits_a, exp_a = to_digits_exp(a._mpf_, limit + _SPARE_DIGITS)
    sign_b, digits_b, exp_b = to_digits_exp(b._mpf_, limit + _SPARE_DIGITS)
    if sign_a != sign_b or exp_a != exp_b:
        return 0
    count = 0
    for da, db in zip(digits_a[:limit], digits_b[:limit]):
        if da != db:
            break
        count += 1
    return count


def agreeing_digits(a: Any, b: Any, limit: int, ctx: PrecisionContext) -> int:
    """
    Count the leading decimal digits two evaluations have in common.

    Real values are compared digit by digit after aligning exponents; the
    count stops at the first differing digit and is also capped by the
    relative gap, so 1.999... against 2.000... scores conservatively.
    Complex values use the relative gap alone.

    Args:
        a: First evaluation
        b: Second (reference) evaluation
        limit: Maximum count returned
        ctx: Context used for the comparison arithmetic

    Returns:
        Agreement count in [0, limit]
    """
    a = ctx.number(a)
    b = ctx.number(b)
    gap_digits = _relative_gap_digits(a, b, limit, ctx)
    if is_complex(a) or is_complex(b):
        return max(0, gap_digits)
    return max(0, min(gap_digits, _prefix_digits(a, b, limit)))


def certify(evaluator: Callable[[PrecisionContext], Any], ctx: PrecisionContext) -> DigitClaim:
    """
    Run an evaluator at two precisions and certify the digits they share.

    Args:
        evaluator: Deterministic procedure mapping a context to a value
        ctx: Context for the first run; the second adds 64 bits

    Returns:
        DigitClaim holding the higher-precision value

    Raises:
        Anything the evaluator raises
    """
    high_ctx = ctx.extended(CERTIFY_EXTRA_BITS)
    low = evaluator(ctx)
    high = evaluator(high_ctx)
    digits = agreeing_digits(low, high, ctx.target_digits, high_ctx)
    logger.debug("certified %d of %d digits", digits, ctx.target_digits)
    return DigitClaim(value=high_ctx.number(high), certified_digits=digits)


def format_decimal(value: Real, digits: int) -> str:
    """
    Render a Real in scientific notation with ``digits`` significant digits.

    Digits beyond the requested count are dropped, never rounded up.

    Args:
        value: Real to render
        digits: Significant digits to keep (at least 1)

    Returns:
        Text like ``1.2020569031e+0``
    """
    digits = max(1, digits)
    if not value:
        return "0." + "0" * (digits - 1) + "e+0" if digits > 1 else "0e+0"
    sign, body, exponent = to_digits_exp(value._mpf_, digits + _SPARE_DIGITS)
    body = body[:digits].ljust(digits, "0")
    mantissa = body[0] + ("." + body[1:] if digits > 1 else "")
    return f"{sign}{mantissa}e{exponent:+d}"
