"""Complex-s generalizations: the half-plane identities and their fixed-x forms."""

import logging
from fractions import Fraction
from typing import Any

from ..errors import ConfigurationError, PoleError, PreconditionError
from ..numeric import Complex, PrecisionContext, Real
from ..reference import (
    NEAR_POLE_RADIUS,
    TrigKind,
    character_factor,
    character_factor_exact,
    log_sin_closed,
    zeta_nonpositive,
    zeta_oracle,
)
from .bounds import (
    UNCERTIFIED_TAIL_NOTE,
    budget,
    fourier_sum,
    power_tail,
    rounding_allowance,
    theta_of,
)
from .cases import (
    COMPLEX_IDENTITIES,
    VARIANT_MODULUS,
    IdentityCase,
    IdentityId,
    Residual,
    require_valid,
    validity_entry,
)
from .fourier import ENDPOINT_NOTE

logger = logging.getLogger(__name__)


def exact_integer(s: Any) -> int | None:
    """The integer s equals exactly, or None."""
    if isinstance(s, bool):
        return None
    if isinstance(s, int):
        return s
    if isinstance(s, Fraction):
        return s.numerator if s.denominator == 1 else None
    if isinstance(s, float):
        return int(s) if s.is_integer() else None
    if isinstance(s, complex):
        return exact_integer(s.real) if s.imag == 0 else None
    if hasattr(s, "_mpc_"):
        return exact_integer(complex(s)) if s.imag == 0 else None
    if hasattr(s, "_mpf_"):
        return int(s) if s == int(s) else None
    return None


def zeta_value(w: Any, ctx: PrecisionContext) -> Real | Complex:
    """
    ζ(w) with exact values at non-positive integers.

    Raises:
        PoleError: At w = 1 or within the near-pole radius of it
    """
    n = exact_integer(w)
    if n is not None:
        if n == 1:
            raise PoleError("ζ has a simple pole at s = 1")
        if n <= 0:
            return ctx.real(zeta_nonpositive(-n))
        return zeta_oracle(n, ctx)
    value = ctx.number(w)
    if abs(value - 1) < NEAR_POLE_RADIUS:
        raise PoleError(f"ζ argument {ctx.mp.nstr(value, 12)} collides with the pole at 1")
    return zeta_oracle(value, ctx)


def pole_factor(s: Any, k: int, ctx: PrecisionContext) -> Real | Complex:
    """
    (s - 2k)·ζ(s + 1 - 2k), taking the residue 1 when s = 2k exactly.

    Args:
        s: Exponent as supplied by the caller (ints and Fractions stay exact)
        k: Summation index
        ctx: Precision context

    Raises:
        PoleError: When s + 1 - 2k is near 1 without s being exactly 2k
    """
    n = exact_integer(s)
    if n is not None:
        if n == 2 * k:
            return ctx.mp.mpf(1)
        return (n - 2 * k) * zeta_value(n + 1 - 2 * k, ctx)
    value = ctx.number(s)
    return (value - 2 * k) * zeta_value(value + 1 - 2 * k, ctx)


def _check_half_plane(identity: IdentityId, s: Any, bar: int, ctx: PrecisionContext) -> Any:
    value = ctx.number(s)
    if ctx.mp.re(value) <= bar:
        raise PreconditionError(f"{identity.value} needs Re(s) > {bar}, got s={s}")
    return value


def _power_terms(
    s: Any, theta: Real, K: int, weighted: bool, ctx: PrecisionContext
) -> list[Real | Complex]:
    """Σ_k (-1)^k (s+2k-1)^[weighted] θ^(2k)/(2k)! · (s-2k)ζ(s+1-2k) for k < K."""
    mp = ctx.mp
    value = ctx.number(s)
    theta2 = theta * theta
    scaled = mp.mpf(1)
    terms = []
    for k in range(K):
        term = scaled * pole_factor(s, k, ctx)
        if weighted:
            term *= value + 2 * k - 1
        terms.append(term if k % 2 == 0 else -term)
        scaled = scaled * theta2 / ((2 * k + 1) * (2 * k + 2))
    return terms


def _twisted_lhs(s: Any, m: int, ctx: PrecisionContext) -> tuple[Any, list[Any]]:
    """
    s(s-1)λ_m(s+1)ζ(s+1) + (2π/m)²λ_m(s-1)ζ(s-1), with limits at s = 0 and s = 2.

    At s = 0 the first product tends to -λ_m(1) = 0; at s = 2 the second
    tends to (2π/m)²·λ_m'(1) = -(2π/m)²·ln(2 sin(π/m)).
    """
    t2 = (2 * ctx.pi / m) ** 2
    n = exact_integer(s)
    value = ctx.number(s)

    if n == 0:
        first = ctx.real(-character_factor_exact(m, 1))
    else:
        if abs(value) < NEAR_POLE_RADIUS:
            raise PoleError(f"s={s} is within {NEAR_POLE_RADIUS} of the pole of ζ(s+1)")
        first = value * (value - 1) * character_factor(m, value + 1, ctx) * zeta_value(
            (n + 1) if n is not None else value + 1, ctx
        )

    if n == 2:
        second = t2 * log_sin_closed(Fraction(1, m), ctx)
    else:
        if abs(value - 2) < NEAR_POLE_RADIUS:
            raise PoleError(f"s={s} is within {NEAR_POLE_RADIUS} of the pole of ζ(s-1)")
        second = t2 * character_factor(m, value - 1, ctx) * zeta_value(
            (n - 1) if n is not None else value - 1, ctx
        )
    return first + second, [first, second]


def verify_complex(
    identity: IdentityId,
    s: Any,
    x: Fraction | None,
    N: int,
    K: int,
    ctx: PrecisionContext,
) -> Residual:
    """
    Verify one complex-s identity.

    T4.7:  s·C(s+1) + (πx)·S(s) = Σ (-1)^k (s-2k)/(2k)! (πx)^(2k) ζ(s+1-2k), Re(s) > 1
    T4.8:  s(s-1)·C(s+1) + (πx)²·C(s-1) = Σ (-1)^k (s-2k)(s+2k-1)/(2k)! (πx)^(2k) ζ(s+1-2k),
           Re(s) > 2
    T4.9:  the T4.8 identity at x/c = 2/3, 1/2, 1/3 with the cosine sums replaced
           by λ_m·ζ, valid for every s

    C and S are cosine and sine Dirichlet sums at angle πx/c; for T4.9 the
    left side is closed-form and N is unused.

    Args:
        identity: T4.7, T4.8, T4.9-a, T4.9-b or T4.9-c
        s: Real or complex exponent
        x: x/c; defaults to the fixed value for T4.9
        N: Fourier terms (T4.7, T4.8)
        K: Power-side terms
        ctx: Precision context

    Returns:
        Residual

    Raises:
        PreconditionError: If s or x is outside the identity's domain
        PoleError: If some ζ argument lands on or next to the pole
    """
    if identity not in COMPLEX_IDENTITIES:
        raise ConfigurationError(f"{identity.value} is not a complex-s identity")
    entry = validity_entry(identity)
    if x is None:
        if not entry.fixed:
            raise ConfigurationError(f"{identity.value} needs an x/c value")
        x = entry.fixed[0]
    x = Fraction(x)
    gating = require_valid(identity, x)
    case = IdentityCase(identity=identity, s=s, x=x, N=N, K=K)
    mp = ctx.mp
    theta = theta_of(x, ctx)
    rho = (x / 2) ** 2

    fourier_parts: list[Any] = []
    if identity is IdentityId.T4_7:
        value = _check_half_plane(identity, s, 1, ctx)
        cos_sum, cos_tail = fourier_sum(TrigKind.COSINE, x, value + 1, N, ctx)
        sin_sum, sin_tail = fourier_sum(TrigKind.SINE, x, value, N, ctx)
        lhs = value * cos_sum + theta * sin_sum
        fourier_parts = [abs(value) * cos_tail + abs(theta) * sin_tail]
        magnitudes = [value * cos_sum, theta * sin_sum]
        terms = _power_terms(s, theta, K, weighted=False, ctx=ctx)
        operations = N + K
    elif identity is IdentityId.T4_8:
        value = _check_half_plane(identity, s, 2, ctx)
        high, high_tail = fourier_sum(TrigKind.COSINE, x, value + 1, N, ctx)
        low, low_tail = fourier_sum(TrigKind.COSINE, x, value - 1, N, ctx)
        lhs = value * (value - 1) * high + theta**2 * low
        fourier_parts = [abs(value * (value - 1)) * high_tail + theta**2 * low_tail]
        magnitudes = [value * (value - 1) * high, theta**2 * low]
        terms = _power_terms(s, theta, K, weighted=True, ctx=ctx)
        operations = N + K
    else:
        lhs, magnitudes = _twisted_lhs(s, VARIANT_MODULUS[identity], ctx)
        terms = _power_terms(s, theta, K, weighted=True, ctx=ctx)
        operations = K

    rhs = mp.fsum(terms)
    tail = power_tail(terms, rho, ctx)
    rounding = rounding_allowance(operations, [lhs, rhs, *magnitudes, *terms[:3]], ctx)
    notes: tuple[str, ...] = ()
    if not gating:
        notes = (ENDPOINT_NOTE,)
        logger.warning("%s: %s", case.case_id, ENDPOINT_NOTE)
    elif not tail.certified:
        gating = False
        notes = (UNCERTIFIED_TAIL_NOTE,)
        logger.warning("%s: %s", case.case_id, UNCERTIFIED_TAIL_NOTE)
    return Residual(
        case=case,
        lhs=lhs,
        rhs=rhs,
        expected_bound=budget(*fourier_parts, tail.bound, rounding),
        gating=gating,
        notes=notes,
    )


def ck_complex(s: Any, K: int, ctx: PrecisionContext) -> Real | Complex:
    """
    ζ(s+1) from the whole-plane Cvijović–Klinowski form.

    ζ(s+1) = 2^s/(s(2^(s+1)-1)) Σ_{k=1..K} (-1)^(k-1) π^(2k)/(2k)! (s-2k) ζ(s+1-2k)

    At s = 2r the k = r term takes the residue and the k > r terms are the
    exact values ζ(1-2j) = -B_2j/(2j), reproducing the finite recurrence.

    Args:
        s: Exponent, s != 0
        K: Terms summed
        ctx: Precision context

    Returns:
        Truncated value of ζ(s+1)

    Raises:
        PreconditionError: If s = 0 or 2^(s+1) = 1
    """
    mp = ctx.mp
    value = ctx.number(s)
    if exact_integer(s) == 0 or not value:
        raise PreconditionError("the whole-plane recurrence needs s != 0")
    denominator = value * (mp.power(2, value + 1) - 1)
    if not denominator:
        raise PreconditionError(f"2^(s+1) = 1 at s={s}")
    pi2 = ctx.pi**2
    scaled = mp.mpf(1)
    total = mp.mpf(0)
    for k in range(1, K + 1):
        scaled = scaled * pi2 / ((2 * k - 1) * (2 * k))
        term = scaled * pole_factor(s, k, ctx)
        total = total + term if k % 2 else total - term
    return mp.power(2, value) / denominator * total
