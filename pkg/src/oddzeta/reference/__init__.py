"""Classical zeta values, the independent oracle and trigonometric sums."""

from .gamma import gamma_fn, spouge_parameter
from .trig import (
    TWIST_MODULI,
    TrigKind,
    TrigSumSpec,
    character_factor,
    character_factor_exact,
    log_sin_closed,
    sin_series_closed,
    trig_dirichlet,
)
from .zeta import (
    NEAR_POLE_RADIUS,
    ZetaEvenValue,
    zeta_even,
    zeta_even_coefficient,
    zeta_nonpositive,
    zeta_oracle,
)

__all__ = [
    "NEAR_POLE_RADIUS",
    "TWIST_MODULI",
    "TrigKind",
    "TrigSumSpec",
    "ZetaEvenValue",
    "character_factor",
    "character_factor_exact",
    "gamma_fn",
    "log_sin_closed",
    "sin_series_closed",
    "spouge_parameter",
    "trig_dirichlet",
    "zeta_even",
    "zeta_even_coefficient",
    "zeta_nonpositive",
    "zeta_oracle",
]
