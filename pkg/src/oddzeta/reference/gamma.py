"""Gamma function by Spouge's approximation, for the zeta reflection path."""

import math
from functools import lru_cache
from typing import Any

from mpmath.ctx_mp import MPContext

from ..errors import PoleError
from ..numeric import Complex, PrecisionContext, Real, is_complex

LOG2_TWO_PI = math.log2(2 * math.pi)


def spouge_parameter(bits: int) -> int:
    """Smallest ``a`` whose relative error bound (2π)^-(a+1/2)/√a is below 2^-bits."""
    return max(3, math.ceil(bits / LOG2_TWO_PI) + 1)


def _coefficient_bits(bits: int) -> int:
    # the alternating coefficients lose about 1.4·a bits to cancellation
    return bits + math.ceil(1.4 * spouge_parameter(bits)) + 10


@lru_cache(maxsize=16)
def _spouge_coefficients(bits: int) -> tuple[tuple, ...]:
    """c_0 = √(2π), c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!  as raw mpf tuples."""
    a = spouge_parameter(bits)
    mp = MPContext()
    mp.prec = _coefficient_bits(bits)
    half = mp.mpf(1) / 2
    coeffs = [mp.sqrt(2 * mp.pi)]
    for k in range(1, a):
        c = mp.power(a - k, k - half) * mp.exp(a - k) / mp.factorial(k - 1)
        coeffs.append(c if k % 2 else -c)
    return tuple(c._mpf_ for c in coeffs)


def _is_nonpositive_integer(z: Any, ctx: PrecisionContext) -> bool:
    mp = ctx.mp
    if is_complex(z) and mp.im(z) != 0:
        return False
    x = mp.re(z)
    return x <= 0 and x == mp.floor(x)


def _spouge(z: Any, inner: PrecisionContext, bits: int) -> Any:
    """Γ(z) for Re(z) >= 1/2, evaluated in ``inner``."""
    mp = inner.mp
    coeffs = [mp.make_mpf(raw) for raw in _spouge_coefficients(bits)]
    a = len(coeffs)
    w = z - 1
    total = coeffs[0]
    for k in range(1, a):
        total += coeffs[k] / (w + k)
    base = w + a
    return mp.power(base, w + mp.mpf(1) / 2) * mp.exp(-base) * total


def gamma_fn(z: Any, ctx: PrecisionContext) -> Real | Complex:
    """
    Evaluate Γ(z) with Spouge's series.

    Arguments with Re(z) < 1/2 go through the reflection formula
    Γ(z)Γ(1-z) = π / sin(πz).

    Args:
        z: Real or complex argument
        ctx: Precision context

    Returns:
        Γ(z) rounded to ctx; real for real input

    Raises:
        PoleError: If z is a non-positive integer
    """
    bits = ctx.working_bits
    inner = ctx.extended(_coefficient_bits(bits) - bits)
    z = inner.number(z)
    if _is_nonpositive_integer(z, inner):
        raise PoleError(f"Γ has a pole at z = {ctx.mp.nstr(z, 10)}")
    mp = inner.mp
    if mp.re(z) < mp.mpf(1) / 2:
        value = inner.pi / (mp.sinpi(z) * _shifted(1 - z, inner, bits))
    else:
        value = _shifted(z, inner, bits)
    return ctx.number(value)


def _shifted(z: Any, inner: PrecisionContext, bits: int) -> Any:
    # keep the series argument at Re >= 3/2 where the error bound is stated
    if inner.mp.re(z) < 1.5:
        return _spouge(z + 1, inner, bits) / z
    return _spouge(z, inner, bits)
