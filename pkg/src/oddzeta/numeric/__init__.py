"""Precision management, exact-to-floating conversion and digit certification."""

from .certify import CERTIFY_EXTRA_BITS, DigitClaim, agreeing_digits, certify, format_decimal
from .context import (
    DEFAULT_GUARD_BITS,
    Complex,
    PrecisionContext,
    Rational,
    Real,
    adopt,
    is_complex,
    make_context,
    rational_to_real,
    required_bits,
)

__all__ = [
    "CERTIFY_EXTRA_BITS",
    "DEFAULT_GUARD_BITS",
    "Complex",
    "DigitClaim",
    "PrecisionContext",
    "Rational",
    "Real",
    "adopt",
    "agreeing_digits",
    "certify",
    "format_decimal",
    "is_complex",
    "make_context",
    "rational_to_real",
    "required_bits",
]
