"""Identity cases, residuals and the validity-interval table."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from ..errors import ConfigurationError, PreconditionError
from ..numeric import Complex, Real


class IdentityId(str, Enum):
    """Identifiers of the verifiable identities."""

    T3_5_COS = "T3.5-cos"
    T3_5_SIN = "T3.5-sin"
    L4_2 = "L4.2"
    T4_1 = "T4.1"
    T4_2 = "T4.2"
    T4_3 = "T4.3"
    L4_1_A = "L4.1-a"
    L4_1_B = "L4.1-b"
    L4_1_C = "L4.1-c"
    EX2_17 = "Ex2.17"
    L3_2_SIN = "L3.2-sin"
    L3_2_COS = "L3.2-cos"
    L3_4 = "L3.4"
    T4_7 = "T4.7"
    T4_8 = "T4.8"
    T4_9_A = "T4.9-a"
    T4_9_B = "T4.9-b"
    T4_9_C = "T4.9-c"

    @classmethod
    def parse(cls, text: str) -> list["IdentityId"]:
        """
        Resolve a selector to identities.

        ``L4.1``, ``L3.2``, ``T3.5`` and ``T4.9`` expand to all their variants;
        matching ignores case.
        """
        wanted = text.strip().lower()
        exact = [member for member in cls if member.value.lower() == wanted]
        if exact:
            return exact
        family = [member for member in cls if member.value.lower().startswith(wanted + "-")]
        if family:
            return family
        known = ", ".join(member.value for member in cls)
        raise ConfigurationError(f"unknown identity {text!r}; known: {known}")


# variant suffix → modulus m, angle 2π/m, x/c = 2/m
VARIANT_MODULUS = {
    IdentityId.L4_1_A: 3,
    IdentityId.L4_1_B: 4,
    IdentityId.L4_1_C: 6,
    IdentityId.T4_9_A: 3,
    IdentityId.T4_9_B: 4,
    IdentityId.T4_9_C: 6,
}

COMPLEX_IDENTITIES = (
    IdentityId.T4_7,
    IdentityId.T4_8,
    IdentityId.T4_9_A,
    IdentityId.T4_9_B,
    IdentityId.T4_9_C,
)


@dataclass(frozen=True)
class IdentityCase:
    """
    One instance of an identity.

    Attributes:
        identity: Which identity
        r: Integer order for the r-indexed identities
        s: Real or complex exponent for the s-indexed ones
        x: The identity's rational parameter (x/c for most of them)
        N: Fourier-side truncation
        K: Power-side truncation
    """

    identity: IdentityId
    r: int | None = None
    s: Any = None
    x: Fraction | None = None
    N: int = 10_000
    K: int = 60

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ConfigurationError(f"N must be at least 1, got {self.N}")
        if self.K < 1:
            raise ConfigurationError(f"K must be at least 1, got {self.K}")
        if self.r is not None and self.r < 1:
            raise ConfigurationError(f"r must be at least 1, got {self.r}")

    @property
    def case_id(self) -> str:
        parts = []
        if self.r is not None:
            parts.append(f"r={self.r}")
        if self.s is not None:
            parts.append(f"s={self.s}")
        if self.x is not None:
            parts.append(f"x={self.x}")
        parts.append(f"N={self.N}")
        parts.append(f"K={self.K}")
        return f"{self.identity.value}[{','.join(parts)}]"


@dataclass(frozen=True)
class Residual:
    """
    Left side, right side and the truncation budget of one case.

    Attributes:
        case: The evaluated case
        lhs: Left-hand side
        rhs: Right-hand side
        expected_bound: Truncation majorant times the safety factor
        gating: False for endpoint cases that are reported but never fail a run
        notes: Free-form remarks (endpoint, slow convergence)
        cesaro_residual: |Cesàro mean - closed form| for the s = 1 series
        cesaro_halved: Whether the Cesàro residual is at most half the raw one
    """

    case: IdentityCase
    lhs: Real | Complex
    rhs: Real | Complex
    expected_bound: Real
    gating: bool = True
    notes: tuple[str, ...] = field(default_factory=tuple)
    cesaro_residual: Real | None = None
    cesaro_halved: bool | None = None

    @property
    def abs_residual(self) -> Real:
        return abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        return bool(self.abs_residual <= self.expected_bound)

    @property
    def failed_gate(self) -> bool:
        """True when this residual should fail a verification run."""
        return self.gating and not self.passed


@dataclass(frozen=True)
class ValidityEntry:
    """
    Where an identity is proved to hold.

    Attributes:
        identity: Identity
        parameter: Meaning of the x parameter
        lower: Lower end, None when x is unused or fixed
        upper: Upper end
        lower_open: Lower end excluded
        upper_open: Upper end excluded
        fixed: The only admissible x values, for the specialised identities
        s_condition: Requirement on s, if s-indexed
        note: Extra conditions in words
    """

    identity: IdentityId
    parameter: str
    lower: Fraction | None = None
    upper: Fraction | None = None
    lower_open: bool = False
    upper_open: bool = False
    fixed: tuple[Fraction, ...] = ()
    s_condition: str | None = None
    note: str = ""

    def interval_text(self) -> str:
        if self.fixed:
            return "{" + ", ".join(str(v) for v in self.fixed) + "}"
        if self.lower is None or self.upper is None:
            return "-"
        left = "(" if self.lower_open else "["
        right = ")" if self.upper_open else "]"
        return f"{left}{self.lower}, {self.upper}{right}"


_TWO = Fraction(2)
_TWIST_X = (Fraction(2, 3), Fraction(1, 2), Fraction(1, 3))

_VALIDITY = (
    ValidityEntry(
        IdentityId.T3_5_COS,
        "x/c",
        Fraction(0),
        _TWO,
        lower_open=True,
        note="r >= 1; x = 0 is a singularity of the logarithmic term",
    ),
    ValidityEntry(IdentityId.T3_5_SIN, "x/c", Fraction(0), _TWO, note="r >= 1"),
    ValidityEntry(IdentityId.L4_2, "x/c", -_TWO, _TWO, note="r >= 1"),
    ValidityEntry(
        IdentityId.T4_1,
        "x/c",
        -_TWO,
        _TWO,
        note="r >= 2; for r = 1 both endpoints are excluded",
    ),
    ValidityEntry(IdentityId.T4_2, "x/c", Fraction(0), _TWO, lower_open=True, upper_open=True),
    ValidityEntry(IdentityId.T4_3, "x/c", fixed=_TWIST_X, note="m = 2/(x/c)"),
    ValidityEntry(IdentityId.L4_1_A, "-", s_condition="Re(s) > 1", note="angle 2π/3"),
    ValidityEntry(IdentityId.L4_1_B, "-", s_condition="Re(s) > 1", note="angle π/2"),
    ValidityEntry(IdentityId.L4_1_C, "-", s_condition="Re(s) > 1", note="angle π/3"),
    ValidityEntry(
        IdentityId.EX2_17,
        "ωt/π",
        Fraction(-1, 3),
        Fraction(1, 3),
        lower_open=True,
        upper_open=True,
    ),
    ValidityEntry(
        IdentityId.L3_2_SIN,
        "x/(2c)",
        Fraction(0),
        Fraction(1),
        lower_open=True,
        upper_open=True,
    ),
    ValidityEntry(
        IdentityId.L3_2_COS,
        "x/(2c)",
        Fraction(0),
        Fraction(1),
        lower_open=True,
        upper_open=True,
    ),
    ValidityEntry(
        IdentityId.L3_4,
        "x/π",
        Fraction(0),
        Fraction(1),
        lower_open=True,
        upper_open=True,
    ),
    ValidityEntry(IdentityId.T4_7, "x/c", -_TWO, _TWO, s_condition="Re(s) > 1"),
    ValidityEntry(IdentityId.T4_8, "x/c", -_TWO, _TWO, s_condition="Re(s) > 2"),
    ValidityEntry(IdentityId.T4_9_A, "x/c", fixed=(Fraction(2, 3),), s_condition="any s"),
    ValidityEntry(IdentityId.T4_9_B, "x/c", fixed=(Fraction(1, 2),), s_condition="any s"),
    ValidityEntry(IdentityId.T4_9_C, "x/c", fixed=(Fraction(1, 3),), s_condition="any s"),
)


def validity_table() -> list[ValidityEntry]:
    """The validity interval of every identity, in identifier order."""
    return list(_VALIDITY)


def validity_entry(identity: IdentityId) -> ValidityEntry:
    for entry in _VALIDITY:
        if entry.identity is identity:
            return entry
    raise ConfigurationError(f"no validity entry for {identity.value}")


def require_valid(identity: IdentityId, x: Fraction, r: int | None = None) -> bool:
    """
    Reject parameters outside an identity's interval.

    Args:
        identity: Identity being evaluated
        x: Its rational parameter
        r: Order, for the r-dependent interval of T4.1

    Returns:
        True if the case gates a run, False for endpoints x/c = ±2 whose
        truncation budget cannot be certified

    Raises:
        PreconditionError: If x lies outside the interval
    """
    entry = validity_entry(identity)
    if entry.fixed:
        if x not in entry.fixed:
            raise PreconditionError(
                f"{identity.value} is stated only at {entry.parameter} in {entry.interval_text()}, "
                f"got {x}"
            )
        return True
    if entry.lower is None or entry.upper is None:
        return True
    lower_open = entry.lower_open
    upper_open = entry.upper_open
    if identity is IdentityId.T4_1 and r == 1:
        lower_open = upper_open = True
    below = x < entry.lower or (lower_open and x == entry.lower)
    above = x > entry.upper or (upper_open and x == entry.upper)
    if below or above:
        raise PreconditionError(
            f"{identity.value} needs {entry.parameter} in {entry.interval_text()}, got {x}"
        )
    return not (entry.parameter == "x/c" and abs(x) == _TWO)
