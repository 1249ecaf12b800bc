"""Precision contexts and exact-to-floating conversions."""

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, TypeAlias

from mpmath.ctx_mp import MPContext
from mpmath.libmp import mpf_pi
from mpmath.libmp.libmpc import mpc_pos
from mpmath.libmp.libmpf import from_rational, mpf_pos, round_nearest

from ..errors import ConfigurationError

# mpmath ships no type information; the aliases name what a value holds.
Real: TypeAlias = Any
Complex: TypeAlias = Any
Rational: TypeAlias = Fraction | int

DEFAULT_GUARD_BITS = 64
MIN_GUARD_BITS = 32
MAX_TARGET_DIGITS = 10**6
LOG2_10 = math.log2(10)


def required_bits(target_digits: int, guard_bits: int = DEFAULT_GUARD_BITS) -> int:
    """Smallest working precision that honours ``target_digits`` plus guard."""
    return math.ceil(target_digits * LOG2_10) + guard_bits


@lru_cache(maxsize=64)
def _pi_raw(bits: int) -> tuple:
    return mpf_pi(bits, round_nearest)


@dataclass(frozen=True)
class PrecisionContext:
    """
    Immutable precision setting that every numeric operation receives.

    Each context owns a private mpmath context, so no global precision
    state is read or written anywhere in the package.

    Attributes:
        target_digits: Decimal digits requested by the caller
        working_bits: Binary mantissa precision used for arithmetic
        guard_bits: Bits reserved beyond the target
    """

    target_digits: int
    working_bits: int
    guard_bits: int = DEFAULT_GUARD_BITS

    def __post_init__(self) -> None:
        if not 1 <= self.target_digits <= MAX_TARGET_DIGITS:
            raise ConfigurationError(
                f"target_digits must be in [1, {MAX_TARGET_DIGITS}], got {self.target_digits}"
            )
        if self.guard_bits < MIN_GUARD_BITS:
            raise ConfigurationError(
                f"guard_bits must be at least {MIN_GUARD_BITS}, got {self.guard_bits}"
            )
        needed = required_bits(self.target_digits, self.guard_bits)
        if self.working_bits < needed:
            raise ConfigurationError(
                f"working_bits={self.working_bits} is below the {needed} bits needed for "
                f"{self.target_digits} digits"
            )

    @classmethod
    def from_bits(
        cls, working_bits: int, guard_bits: int = DEFAULT_GUARD_BITS
    ) -> "PrecisionContext":
        """
        Build the context with the largest target that ``working_bits`` honours.

        Args:
            working_bits: Binary precision wanted
            guard_bits: Guard bits to reserve

        Returns:
            Context with exactly ``working_bits`` bits

        Raises:
            ConfigurationError: If the bits cannot hold a single digit
        """
        target = math.floor((working_bits - guard_bits) / LOG2_10)
        if target < 1:
            raise ConfigurationError(f"{working_bits} bits leave no room for any digit")
        return cls(target_digits=target, working_bits=working_bits, guard_bits=guard_bits)

    @cached_property
    def mp(self) -> MPContext:
        """Private mpmath context running at ``working_bits``."""
        ctx = MPContext()
        ctx.prec = self.working_bits
        return ctx

    @cached_property
    def pi(self) -> Real:
        """π correctly rounded to the working precision."""
        return self.mp.make_mpf(_pi_raw(self.working_bits))

    @property
    def rounding_unit(self) -> Real:
        """Relative size of one unit in the last guaranteed place."""
        return self.mp.ldexp(self.mp.mpf(1), -(self.working_bits - self.guard_bits))

    def extended(self, extra_bits: int) -> "PrecisionContext":
        """Same target, ``extra_bits`` more working precision."""
        return replace(self, working_bits=self.working_bits + extra_bits)

    def real(self, q: Rational) -> Real:
        """Shorthand for :func:`rational_to_real`."""
        return rational_to_real(q, self)

    def number(self, value: Any) -> Real | Complex:
        """Shorthand for :func:`adopt`."""
        return adopt(value, self)


def make_context(target_digits: int, guard_bits: int = DEFAULT_GUARD_BITS) -> PrecisionContext:
    """
    Create a precision context for the requested number of digits.

    Args:
        target_digits: Decimal digits requested, 1 to 10**6
        guard_bits: Extra binary digits carried beyond the target

    Returns:
        Context with working_bits = ceil(target_digits * log2(10)) + guard_bits

    Raises:
        ConfigurationError: If target_digits is not a positive integer in range
    """
    if isinstance(target_digits, bool) or not isinstance(target_digits, int):
        raise ConfigurationError(f"target_digits must be an integer, got {target_digits!r}")
    if not 1 <= target_digits <= MAX_TARGET_DIGITS:
        raise ConfigurationError(
            f"target_digits must be in [1, {MAX_TARGET_DIGITS}], got {target_digits}"
        )
    return PrecisionContext(
        target_digits=target_digits,
        working_bits=required_bits(target_digits, guard_bits),
        guard_bits=guard_bits,
    )


def rational_to_real(q: Rational, ctx: PrecisionContext) -> Real:
    """
    Convert an exact rational to a correctly rounded Real.

    Args:
        q: Fraction or int
        ctx: Precision context

    Returns:
        q rounded to nearest at ctx.working_bits
    """
    q = Fraction(q)
    raw = from_rational(q.numerator, q.denominator, ctx.working_bits, round_nearest)
    return ctx.mp.make_mpf(raw)


def adopt(value: Any, ctx: PrecisionContext) -> Real | Complex:
    """
    Round any supported number into ``ctx``.

    Accepts ints, Fractions, Python floats/complex numbers and mpmath values
    created under any other context.

    Args:
        value: Number to convert
        ctx: Target context

    Returns:
        Real for real input, Complex otherwise
    """
    if hasattr(value, "_mpf_"):
        return ctx.mp.make_mpf(mpf_pos(value._mpf_, ctx.working_bits, round_nearest))
    if hasattr(value, "_mpc_"):
        return ctx.mp.make_mpc(mpc_pos(value._mpc_, ctx.working_bits, round_nearest))
    if isinstance(value, (int, Fraction)):
        return rational_to_real(value, ctx)
    if isinstance(value, float):
        return ctx.mp.mpf(value)
    if isinstance(value, complex):
        return ctx.mp.mpc(value.real, value.imag)
    raise TypeError(f"cannot convert {type(value).__name__} to a context number")


def is_complex(value: Any) -> bool:
    """True for mpmath complex values and Python complex numbers."""
    return hasattr(value, "_mpc_") or isinstance(value, complex)
