"""Series families for odd zeta values and their exact coefficients."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial

from ..errors import ConfigurationError
from ..reference import TWIST_MODULI, character_factor_exact


class SeriesFamily(str, Enum):
    """
    Which rapidly converging series is being evaluated.

    EWELL and CK decay like 2^-2k; M3, M4 and M6 come from the cosine sums
    at x/c = 2/3, 1/2, 1/3 and decay like m^-2k.
    """

    EWELL = "ewell"
    CK = "ck"
    M3 = "m3"
    M4 = "m4"
    M6 = "m6"

    @property
    def m(self) -> int:
        """Modulus controlling the m^-2k decay."""
        return _MODULUS[self]

    @property
    def twisted(self) -> bool:
        """True for the families built on closed-form twisted cosine sums."""
        return self in (SeriesFamily.M3, SeriesFamily.M4, SeriesFamily.M6)

    @classmethod
    def for_modulus(cls, m: int) -> "SeriesFamily":
        """Twisted family for m in {3, 4, 6}."""
        for family in (cls.M3, cls.M4, cls.M6):
            if family.m == m:
                return family
        raise ConfigurationError(f"m must be one of {TWIST_MODULI}, got {m}")


_MODULUS = {
    SeriesFamily.EWELL: 2,
    SeriesFamily.CK: 2,
    SeriesFamily.M3: 3,
    SeriesFamily.M4: 4,
    SeriesFamily.M6: 6,
}


class TailKernel(str, Enum):
    """k-dependent rational factor of the infinite ζ(2k) sum."""

    # (2k)! / (2r+2k)!
    CK = "ck"
    # (2k)! (4r+2k-1) / (2r+2k)!
    TWISTED = "twisted"

    def value(self, r: int, k: int) -> Fraction:
        ratio = Fraction(factorial(2 * k), factorial(2 * r + 2 * k))
        if self is TailKernel.TWISTED:
            return ratio * (4 * r + 2 * k - 1)
        return ratio

    def polynomial_order(self, r: int) -> int:
        """p with kernel(k) ~ k^-p for large k."""
        return 2 * r - 1 if self is TailKernel.TWISTED else 2 * r


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """
    Exact coefficients expressing ζ(2r+1) through lower odd values.

    ζ(2r+1) = log_coeff·π²·L + Σ_j lead_zeta_coeffs[j]·π^(2j)·ζ(2r+1-2j)
              + tail_scale·π^(2r)·Σ_{k>=0} kernel(k)·ζ(2k)/m^(2k)

    where L is ζ(2r-1) for r >= 2 and ln(log_argument) for r = 1.

    Attributes:
        r: Order; the series computes ζ(2r+1)
        m: Decay modulus
        lead_zeta_coeffs: j in 1..r-1 → coefficient of π^(2j)·ζ(2r+1-2j)
        log_coeff: Coefficient of the π²·L term
        log_argument: Argument of the logarithm when r = 1 (1 means no term)
        tail_scale: Rational multiplying π^(2r) times the infinite sum
        kernel: Shape of kernel(k)
    """

    r: int
    m: int
    lead_zeta_coeffs: Mapping[int, Fraction] = field(default_factory=dict)
    log_coeff: Fraction = Fraction(0)
    log_argument: int = 1
    tail_scale: Fraction = Fraction(0)
    kernel: TailKernel = TailKernel.CK

    def collected(self) -> dict[int, Fraction]:
        """Coefficient of π^(2j)·ζ(2r+1-2j) after folding log_coeff into j = 1."""
        out = dict(self.lead_zeta_coeffs)
        if self.r >= 2 and self.log_coeff:
            out[1] = out.get(1, Fraction(0)) + self.log_coeff
        return {j: c for j, c in sorted(out.items()) if c}

    def kernel_value(self, k: int) -> Fraction:
        return self.kernel.value(self.r, k)

    def term_rational(self, k: int, zeta_coefficient: Fraction) -> Fraction:
        """kernel(k)·q/m^(2k) where ζ(2k) = q·π^(2k)."""
        return self.kernel_value(k) * zeta_coefficient / Fraction(self.m) ** (2 * k)


def ewell_coefficients() -> RecurrenceCoefficients:
    """ζ(3) = -(4π²/7) Σ_k ζ(2k) / ((2k+1)(2k+2) 2^(2k))."""
    return RecurrenceCoefficients(r=1, m=2, tail_scale=Fraction(-4, 7), kernel=TailKernel.CK)


def ck_coefficients(r: int) -> RecurrenceCoefficients:
    """
    Coefficients of the finite Cvijović–Klinowski recurrence for ζ(2r+1).

    Args:
        r: Order >= 1

    Returns:
        Coefficients with m = 2 and the (2k)!/(2r+2k)! kernel

    Raises:
        ConfigurationError: If r < 1
    """
    if r < 1:
        raise ConfigurationError(f"CK recurrence needs r >= 1, got {r}")
    prefactor = Fraction(2 ** (2 * r), r * (2 ** (2 * r + 1) - 1))
    lead = {
        j: prefactor * (-1) ** (j - 1) * (r - j) / factorial(2 * j) for j in range(1, r)
    }
    return RecurrenceCoefficients(
        r=r,
        m=2,
        lead_zeta_coeffs=lead,
        tail_scale=(-1) ** r * prefactor,
        kernel=TailKernel.CK,
    )


# 4 sin²(π/m): the logarithm's argument in the ζ(3) series
_LOG_ARGUMENT = {3: 3, 4: 2, 6: 1}


def _twisted_coefficients(r: int, m: int) -> RecurrenceCoefficients:
    """
    Solve the combined cosine identity at x/c = 2/m for ζ(2r+1).

    With t = 2π/m the identity reads
        r(2r-1)·C(2r+1) + t²/2·C(2r-1)
          = Σ_{k<r} (-1)^k (r-k)(2r+2k-1)/(2k)! t^(2k) ζ(2r+1-2k)
            + (-1)^(r-1) t^(2r) Σ_k kernel(k) ζ(2k) / m^(2k),
    and C(s) = λ_m(s)·ζ(s). For r = 1, C(1) = -ln(2 sin(π/m)).
    """
    u = Fraction(4, m * m)
    denominator = r * (2 * r - 1) * (character_factor_exact(m, 2 * r + 1) - 1)
    tail_scale = (-1) ** (r - 1) * u**r / denominator

    if r == 1:
        argument = _LOG_ARGUMENT[m]
        log_coeff = u / 4 / denominator if argument != 1 else Fraction(0)
        return RecurrenceCoefficients(
            r=1,
            m=m,
            log_coeff=log_coeff,
            log_argument=argument,
            tail_scale=tail_scale,
            kernel=TailKernel.TWISTED,
        )

    log_coeff = -u / 2 * character_factor_exact(m, 2 * r - 1) / denominator
    lead = {
        j: Fraction((-1) ** j * (r - j) * (2 * r + 2 * j - 1), factorial(2 * j))
        * u**j
        / denominator
        for j in range(1, r)
    }
    return RecurrenceCoefficients(
        r=r,
        m=m,
        lead_zeta_coeffs=lead,
        log_coeff=log_coeff,
        tail_scale=tail_scale,
        kernel=TailKernel.TWISTED,
    )


def zeta3_coefficients(m: int) -> RecurrenceCoefficients:
    """Coefficients of the ζ(3) series with m^-2k decay, m in {3, 4, 6}."""
    if m not in TWIST_MODULI:
        raise ConfigurationError(f"m must be one of {TWIST_MODULI}, got {m}")
    return _twisted_coefficients(1, m)


def recurrence_coefficients(r: int, m: int) -> RecurrenceCoefficients:
    """
    Exact recurrence for ζ(2r+1) with m^-2k decay.

    Args:
        r: Order >= 2
        m: 3, 4 or 6

    Returns:
        Coefficients matching the published specializations after collecting terms

    Raises:
        ConfigurationError: If r < 2 or m is not supported
    """
    if r < 2:
        raise ConfigurationError(f"recurrence_coefficients needs r >= 2, got {r}")
    if m not in TWIST_MODULI:
        raise ConfigurationError(f"m must be one of {TWIST_MODULI}, got {m}")
    return _twisted_coefficients(r, m)


def family_coefficients(family: SeriesFamily, r: int) -> RecurrenceCoefficients:
    """
    Coefficients for any family and order.

    Args:
        family: Series family
        r: Order >= 1 (Ewell only has r = 1)

    Returns:
        RecurrenceCoefficients

    Raises:
        ConfigurationError: For unsupported combinations
    """
    if family is SeriesFamily.EWELL:
        if r != 1:
            raise ConfigurationError("Ewell's formula only computes ζ(3); use the ck family")
        return ewell_coefficients()
    if family is SeriesFamily.CK:
        return ck_coefficients(r)
    if r < 1:
        raise ConfigurationError(f"order must be >= 1, got {r}")
    if r == 1:
        return zeta3_coefficients(family.m)
    return recurrence_coefficients(r, family.m)
