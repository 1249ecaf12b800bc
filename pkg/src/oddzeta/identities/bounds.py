"""Truncation budgets shared by the identity verifiers."""

from collections.abc import Sequence
from fractions import Fraction
from typing import Any, NamedTuple

from ..errors import PoleError, PreconditionError
from ..numeric import PrecisionContext, Real
from ..reference import TrigKind, TrigSumSpec, trig_dirichlet

SAFETY_FACTOR = 10
UNCERTIFIED_TAIL_NOTE = "power-series tail ratio not below one, tail bound is an estimate"


def theta_of(x: Fraction, ctx: PrecisionContext) -> Real:
    """πx/c with c = 1."""
    return ctx.pi * ctx.real(x)


def fourier_sum(
    kind: TrigKind, x: Fraction, s: Any, N: int, ctx: PrecisionContext
) -> tuple[Any, Real]:
    """
    Partial sum of Σ n^-s trig(nπx) with a bound on the omitted remainder.

    For Re(s) > 1 the zeta-tail majorant is used. At s = 1 the Dirichlet
    test gives 1/((N+1)|sin(πx/2)|).

    Raises:
        PoleError: For s = 1 at an angle where the series diverges
    """
    theta = theta_of(x, ctx)
    value, tail = trig_dirichlet(TrigSumSpec(theta=theta, s=s, N=N, kind=kind), ctx)
    if tail is not None:
        return value, tail
    if s != 1:
        raise PreconditionError(f"no remainder bound for Re(s) <= 1 other than s = 1, got s={s}")
    mp = ctx.mp
    if kind is TrigKind.SINE and x.denominator == 1:
        # every sin(nπx) vanishes
        return value, mp.mpf(0)
    if (x / 2).denominator == 1:
        raise PoleError(f"Σ trig(nθ)/n^s diverges at x/c = {x}")
    return value, mp.mpf(1) / ((N + 1) * abs(mp.sin(theta / 2)))



class PowerTail(NamedTuple):
    """Bound on an omitted power-series tail; ``certified`` is False for estimates."""

    bound: Real
    certified: bool


def power_tail(terms: Sequence[Any], rho: Any, ctx: PrecisionContext) -> PowerTail:
    """
    Bound the omitted tail of a power-side sum from its last terms.

    ``rho`` majorizes successive term ratios; the measured ratio of the last
    two terms is used when larger. With no ratio below one there is no
    geometric majorant, and the last term times the number of terms is
    returned as an uncertified estimate.
    """
    mp = ctx.mp
    if not terms:
        return PowerTail(mp.mpf(0), True)
    last = abs(terms[-1])
    ratio = ctx.number(rho)
    if len(terms) >= 2 and terms[-2]:
        ratio = max(ratio, last / abs(terms[-2]))
    if ratio >= 1:
        return PowerTail(last * len(terms), False)
    return PowerTail(last * ratio / (1 - ratio), True)


def rounding_allowance(operations: int, values: Sequence[Any], ctx: PrecisionContext) -> Real:
    """Accumulated rounding for ``operations`` terms at the scale of ``values``."""
    mp = ctx.mp
    scale = max([mp.mpf(1)] + [abs(v) for v in values])
    return (operations + 1) * scale * ctx.rounding_unit


def budget(*parts: Any) -> Real:
    """Sum of the bound components times the safety factor."""
    return SAFETY_FACTOR * sum(parts)
