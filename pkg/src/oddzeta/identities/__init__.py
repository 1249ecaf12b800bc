"""Fourier, power-series and complex-s identities checked numerically."""

from .bounds import (
    SAFETY_FACTOR,
    UNCERTIFIED_TAIL_NOTE,
    PowerTail,
    budget,
    fourier_sum,
    power_tail,
    rounding_allowance,
)
from .cases import (
    COMPLEX_IDENTITIES,
    VARIANT_MODULUS,
    IdentityCase,
    IdentityId,
    Residual,
    ValidityEntry,
    require_valid,
    validity_entry,
    validity_table,
)
from .complex_s import ck_complex, exact_integer, pole_factor, verify_complex, zeta_value
from .fourier import (
    CESARO_NOTE,
    ENDPOINT_NOTE,
    verify_example_2_17,
    verify_lemma_3_2,
    verify_lemma_3_4,
    verify_lemma_4_1,
    verify_lemma_4_2,
    verify_theorem_3_5,
    verify_theorem_4_1,
    verify_theorem_4_2,
    verify_theorem_4_3,
)
from .runner import verify_batch, verify_case

__all__ = [
    "CESARO_NOTE",
    "COMPLEX_IDENTITIES",
    "ENDPOINT_NOTE",
    "SAFETY_FACTOR",
    "UNCERTIFIED_TAIL_NOTE",
    "VARIANT_MODULUS",
    "IdentityCase",
    "IdentityId",
    "PowerTail",
    "Residual",
    "ValidityEntry",
    "budget",
    "ck_complex",
    "exact_integer",
    "fourier_sum",
    "pole_factor",
    "power_tail",
    "require_valid",
    "rounding_allowance",
    "validity_entry",
    "validity_table",
    "verify_batch",
    "verify_case",
    "verify_complex",
    "verify_example_2_17",
    "verify_lemma_3_2",
    "verify_lemma_3_4",
    "verify_lemma_4_1",
    "verify_lemma_4_2",
    "verify_theorem_3_5",
    "verify_theorem_4_1",
    "verify_theorem_4_2",
    "verify_theorem_4_3",
    "zeta_value",
]
