"""Truncated trigonometric Dirichlet sums and their closed forms at s = 1."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from ..errors import ConfigurationError, PoleError
from ..numeric import Complex, PrecisionContext, Rational, Real, is_complex

# re-anchor the phasor e^{inθ} against drift every this many steps
_REANCHOR_EVERY = 1024

TWIST_MODULI = (3, 4, 6)


class TrigKind(str, Enum):
    """Which trigonometric factor multiplies n^-s."""

    COSINE = "cos"
    SINE = "sin"


@dataclass(frozen=True)
class TrigSumSpec:
    """
    One truncated sum Σ_{n=1}^{N} n^-s · trig(nθ).

    Attributes:
        theta: Angle per unit n, i.e. πx/c
        s: Real or complex exponent
        N: Number of terms (0 gives the empty sum)
        kind: Cosine or sine
    """

    theta: Any
    s: Any
    N: int
    kind: TrigKind = TrigKind.COSINE

    def __post_init__(self) -> None:
        if self.N < 0:
            raise ConfigurationError(f"N must be non-negative, got {self.N}")


def _is_positive_integer(s: Any) -> bool:
    return not is_complex(s) and s == int(s) and s > 0


def trig_dirichlet(spec: TrigSumSpec, ctx: PrecisionContext) -> tuple[Real | Complex, Real | None]:
    """
    Sum n^-s · trig(nθ) for n = 1..N.

    The tail bound majorizes the remainder by the zeta tail
    N^(1-Re s)/(Re s - 1), with no credit for cancellation.

    Args:
        spec: Sum to evaluate
        ctx: Precision context

    Returns:
        (partial sum, tail bound or None when Re(s) <= 1)
    """
    mp = ctx.mp
    theta = ctx.number(spec.theta)
    s = ctx.number(spec.s)
    integer_power = _is_positive_integer(s)
    total = mp.mpf(0)

    if theta == 0:
        if spec.kind is TrigKind.COSINE:
            for n in range(1, spec.N + 1):
                total += mp.mpf(1) / n ** int(s) if integer_power else mp.power(n, -s)
    else:
        step = mp.expj(theta)
        phasor = mp.mpc(1)
        for n in range(1, spec.N + 1):
            if n % _REANCHOR_EVERY == 0:
                phasor = mp.expj(n * theta)
            else:
                phasor *= step
            factor = phasor.real if spec.kind is TrigKind.COSINE else phasor.imag
            weight = mp.mpf(1) / n ** int(s) if integer_power else mp.power(n, -s)
            total += weight * factor

    sigma = mp.re(s)
    tail = None
    if sigma > 1 and spec.N >= 1:
        tail = mp.power(spec.N, 1 - sigma) / (sigma - 1)
    return total, tail


def _check_open_unit(x_over_2c: Rational) -> Fraction:
    q = Fraction(x_over_2c)
    if not 0 < q < 1:
        raise PoleError(f"x/(2c) must lie strictly between 0 and 1, got {q}")
    return q


def log_sin_closed(x_over_2c: Rational, ctx: PrecisionContext) -> Real:
    """
    Closed form -ln(2 sin(πx/(2c))) of Σ cos(nπx/c)/n.

    Args:
        x_over_2c: Rational in (0, 1)
        ctx: Precision context

    Returns:
        The logarithmic closed form

    Raises:
        PoleError: At the endpoints, where the cosine series diverges
    """
    q = _check_open_unit(x_over_2c)
    mp = ctx.mp
    return -mp.log(2 * mp.sinpi(ctx.real(q)))


def sin_series_closed(x_over_2c: Rational, ctx: PrecisionContext) -> Real:
    """Closed form π/2 - πx/(2c) of Σ sin(nπx/c)/n on 0 < x < 2c."""
    q = _check_open_unit(x_over_2c)
    return ctx.pi * ctx.real(Fraction(1, 2) - q)


def character_factor_exact(m: int, s: int) -> Fraction:
    """
    Exact λ_m(s) with Σ n^-s cos(2πn/m) = λ_m(s)·ζ(s), for integer s.

    Args:
        m: 3, 4 or 6 (angles 2π/3, π/2, π/3)
        s: Integer exponent

    Returns:
        λ_m(s) as a Fraction
    """
    third, half, sixth = Fraction(3), Fraction(2), Fraction(6)
    if m == 3:
        return (third ** (1 - s) - 1) / 2
    if m == 4:
        return half ** (-s) * (half ** (1 - s) - 1)
    if m == 6:
        return (sixth ** (1 - s) - third ** (1 - s) - half ** (1 - s) + 1) / 2
    raise ConfigurationError(f"modulus must be one of {TWIST_MODULI}, got {m}")


def character_factor(m: int, s: Any, ctx: PrecisionContext) -> Real | Complex:
    """Floating λ_m(s) for real or complex s; see :func:`character_factor_exact`."""
    mp = ctx.mp
    s = ctx.number(s)

    def p(base: int, exponent: Any) -> Any:
        return mp.power(base, exponent)

    if m == 3:
        return (p(3, 1 - s) - 1) / 2
    if m == 4:
        return p(2, -s) * (p(2, 1 - s) - 1)
    if m == 6:
        return (p(6, 1 - s) - p(3, 1 - s) - p(2, 1 - s) + 1) / 2
    raise ConfigurationError(f"modulus must be one of {TWIST_MODULI}, got {m}")
