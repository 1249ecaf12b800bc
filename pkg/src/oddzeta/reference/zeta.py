"""Classical zeta values and the independent ζ(s) oracle."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any

from ..bernoulli import bernoulli_number, bernoulli_polynomial
from ..errors import PoleError, PreconditionError, PrecisionShortfallError
from ..numeric import Complex, PrecisionContext, Real, is_complex
from .gamma import gamma_fn

logger = logging.getLogger(__name__)

NEAR_POLE_RADIUS = 1e-3
ETA_CROSSOVER = 0.5
_ETA_RATE = math.log(3 + math.sqrt(8))
_ETA_MARGIN = 1.1
_MAX_ETA_TERMS = 200_000


@dataclass(frozen=True)
class ZetaEvenValue:
    """
    ζ(2n) as an exact rational multiple of π^(2n) plus its floating value.

    Attributes:
        n: Half the argument
        coefficient: q with ζ(2n) = q·π^(2n)
        value: q·π^(2n) at the context precision
    """

    n: int
    coefficient: Fraction
    value: Real


def zeta_even_coefficient(n: int) -> Fraction:
    """(-1)^(n-1) 2^(2n-1) B_2n / (2n)!, the rational part of ζ(2n)."""
    if n < 1:
        raise ValueError(f"zeta_even needs n >= 1, got {n}")
    sign = 1 if n % 2 else -1
    return sign * Fraction(2 ** (2 * n - 1), factorial(2 * n)) * bernoulli_number(2 * n)


def zeta_even(n: int, ctx: PrecisionContext) -> ZetaEvenValue:
    """
    Evaluate ζ(2n) by Euler's formula.

    Args:
        n: Positive integer
        ctx: Precision context

    Returns:
        Exact coefficient and floating value
    """
    q = zeta_even_coefficient(n)
    return ZetaEvenValue(n=n, coefficient=q, value=ctx.real(q) * ctx.pi ** (2 * n))


def zeta_nonpositive(n: int) -> Fraction:
    """
    Exact ζ(-n) = -B_(n+1)(1) / (n+1).

    Args:
        n: Non-negative integer

    Returns:
        ζ(-n) as a Fraction; ζ(0) = -1/2
    """
    if n < 0:
        raise ValueError(f"zeta_nonpositive needs n >= 0, got {n}")
    return -bernoulli_polynomial(n + 1, 1) / (n + 1)


@lru_cache(maxsize=32)
def _borwein_weights(n: int) -> tuple[Fraction, ...]:
    """(d_k - d_n) / d_n for k < n, with d_k = n Σ_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)."""
    partial = Fraction(0)
    d = []
    for i in range(n + 1):
        partial += Fraction(n * factorial(n + i - 1) * 4**i, factorial(n - i) * factorial(2 * i))
        d.append(partial)
    d_n = d[n]
    return tuple((d_k - d_n) / d_n for d_k in d[:n])


def _inverse_power(k: int, s: Any, mp: Any) -> Any:
    if not is_complex(s) and s == int(s) and s > 0:
        return mp.mpf(1) / mp.mpf(k ** int(s))
    return mp.power(k, -s)


def _eta_terms(s: Any, ctx: PrecisionContext) -> tuple[int, Real]:
    """Term count and the matching error bound for the accelerated eta series."""
    mp = ctx.mp
    t = abs(mp.im(s))
    denominator = abs(gamma_fn(s, ctx)) * abs(1 - mp.power(2, 1 - s))
    needed = (ctx.target_digits + 2) * math.log(10) + math.log(3 * (1 + 2 * float(t)))
    needed += max(0.0, -float(mp.log(denominator)))
    n = max(4, math.ceil(_ETA_MARGIN * needed / _ETA_RATE))
    if n > _MAX_ETA_TERMS:
        raise PrecisionShortfallError(
            f"eta acceleration would need {n} terms at s={mp.nstr(s, 10)}"
        )
    bound = 3 * (1 + 2 * t) / (mp.exp(n * _ETA_RATE) * denominator)
    return n, bound


def _zeta_eta(s: Any, ctx: PrecisionContext) -> Any:
    mp = ctx.mp
    n, bound = _eta_terms(s, ctx)
    total = mp.mpf(0)
    for k, weight in enumerate(_borwein_weights(n)):
        term = ctx.real(weight) * _inverse_power(k + 1, s, mp)
        total = total - term if k % 2 == 0 else total + term
    value = total / (1 - mp.power(2, 1 - s))
    tolerance = mp.mpf(10) ** (-(ctx.target_digits + 1)) * max(abs(value), mp.mpf(1) / 10**6)
    if bound > tolerance:
        raise PrecisionShortfallError(
            f"eta bound {mp.nstr(bound, 5)} exceeds tolerance at s={mp.nstr(s, 10)}"
        )
    logger.debug("oracle eta path at s=%s: %d terms", mp.nstr(s, 10), n)
    return value


def _zeta_reflected(s: Any, ctx: PrecisionContext) -> Any:
    """ζ(s) = 2^s π^(s-1) sin(πs/2) Γ(1-s) ζ(1-s) for Re(s) < 1/2."""
    mp = ctx.mp
    if s == 0:
        # sin(πs/2)·ζ(1-s) → -π/2 with unit residue at 1
        return mp.mpf(-1) / 2
    near_pole = abs(s) < NEAR_POLE_RADIUS
    mirrored = zeta_oracle(1 - s, ctx, near_pole=near_pole)
    return (
        mp.power(2, s)
        * mp.power(ctx.pi, s - 1)
        * mp.sinpi(s / 2)
        * gamma_fn(1 - s, ctx)
        * mirrored
    )


def zeta_oracle(s: Any, ctx: PrecisionContext, near_pole: bool = False) -> Real | Complex:
    """
    Evaluate ζ(s) without using Bernoulli numbers for Re(s) >= 1/2.

    For Re(s) >= 1/2 the alternating eta series is summed with Borwein's
    binomial-weighted acceleration and divided by 1 - 2^(1-s). Below the
    crossover the functional equation maps the argument back into that
    half-plane.

    Args:
        s: Real or complex argument, s != 1
        ctx: Precision context
        near_pole: Allow |s - 1| < 1e-3 (extra precision is used)

    Returns:
        ζ(s), real when s is real

    Raises:
        PoleError: If s == 1
        PreconditionError: If s is near the pole and near_pole is False
        PrecisionShortfallError: If the acceleration cannot meet the target
    """
    mp = ctx.mp
    s = ctx.number(s)
    if s == 1:
        raise PoleError("ζ has a simple pole at s = 1")
    distance = abs(s - 1)
    if distance < NEAR_POLE_RADIUS:
        if not near_pole:
            raise PreconditionError(
                f"s={mp.nstr(s, 12)} is within {NEAR_POLE_RADIUS} of the pole; "
                "pass near_pole=True to evaluate"
            )
        extra = math.ceil(-float(mp.log(distance, 2))) + 16
        inner = ctx.extended(extra)
        return ctx.number(_zeta_eta(inner.number(s), inner))
    if mp.re(s) >= ETA_CROSSOVER:
        return _zeta_eta(s, ctx)
    return _zeta_reflected(s, ctx)
