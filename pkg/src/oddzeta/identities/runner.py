"""Dispatch identity cases to their verifiers, one at a time or as a batch."""

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from ..errors import ConfigurationError
from ..numeric import PrecisionContext
from ..reference import TrigKind
from .cases import COMPLEX_IDENTITIES, IdentityCase, IdentityId, Residual
from .complex_s import verify_complex
from .fourier import (
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

logger = logging.getLogger(__name__)

# Fourier sums beyond this many terms take minutes at 50 digits
SLOW_N = 1_000_000
_NO_FOURIER_SIDE = (
    IdentityId.T4_3,
    IdentityId.L3_4,
    IdentityId.T4_9_A,
    IdentityId.T4_9_B,
    IdentityId.T4_9_C,
)


def _need(case: IdentityCase, field: str) -> None:
    if getattr(case, field) is None:
        raise ConfigurationError(f"{case.identity.value} needs {field}")


def verify_case(case: IdentityCase, ctx: PrecisionContext) -> Residual:
    """
    Evaluate one identity case.

    Args:
        case: Identity and its parameters
        ctx: Precision context

    Returns:
        Residual of the case

    Raises:
        ConfigurationError: If a parameter the identity needs is missing
        PreconditionError: If a parameter lies outside the validity interval
        PoleError: If an evaluation lands on a pole
    """
    identity = case.identity
    logger.debug("verifying %s", case.case_id)
    if case.N > SLOW_N and identity not in _NO_FOURIER_SIDE:
        logger.warning("%s: N=%d Fourier terms will be slow", case.case_id, case.N)

    if identity in COMPLEX_IDENTITIES:
        _need(case, "s")
        return verify_complex(identity, case.s, case.x, case.N, case.K, ctx)
    if identity in (IdentityId.L4_1_A, IdentityId.L4_1_B, IdentityId.L4_1_C):
        _need(case, "s")
        return verify_lemma_4_1(case.s, identity, case.N, ctx)

    if identity is IdentityId.T4_3:
        if case.x is None:
            raise ConfigurationError("T4.3 needs x/c in {2/3, 1/2, 1/3}")
        return verify_theorem_4_3(case.x, ctx)

    _need(case, "x")
    x = case.x
    assert x is not None
    if identity is IdentityId.EX2_17:
        return verify_example_2_17(x, case.N, ctx)
    if identity is IdentityId.L3_4:
        return verify_lemma_3_4(x, case.K, ctx)
    if identity in (IdentityId.L3_2_SIN, IdentityId.L3_2_COS):
        sine, cosine = verify_lemma_3_2(x, case.N, ctx)
        return sine if identity is IdentityId.L3_2_SIN else cosine
    if identity is IdentityId.T4_2:
        return verify_theorem_4_2(x, case.N, case.K, ctx)

    _need(case, "r")
    r = case.r
    assert r is not None
    if identity is IdentityId.T3_5_COS:
        return verify_theorem_3_5(r, x, case.N, case.K, ctx, TrigKind.COSINE)
    if identity is IdentityId.T3_5_SIN:
        return verify_theorem_3_5(r, x, case.N, case.K, ctx, TrigKind.SINE)
    if identity is IdentityId.L4_2:
        return verify_lemma_4_2(r, x, case.N, case.K, ctx)
    if identity is IdentityId.T4_1:
        return verify_theorem_4_1(r, x, case.N, case.K, ctx)
    raise ConfigurationError(f"no verifier for {identity.value}")


def verify_batch(
    cases: Sequence[IdentityCase],
    ctx: PrecisionContext,
    max_workers: int = 4,
) -> list[Residual]:
    """
    Evaluate many cases concurrently.

    Each case runs against its own copy of the context; results come back in
    the order of ``cases`` regardless of completion order. The first error
    raised by any case propagates.
    """
    if not cases:
        return []
    if max_workers < 1:
        raise ConfigurationError(f"max_workers must be at least 1, got {max_workers}")
    workers = min(max_workers, len(cases))
    logger.info("verifying %d cases on %d workers", len(cases), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(verify_case, case, ctx.extended(0)) for case in cases]
        return [future.result() for future in futures]

