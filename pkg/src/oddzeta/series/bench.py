"""Terms-to-digits benchmark across series families."""

import logging
import time
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ..numeric import PrecisionContext, Real, make_context
from .evaluators import zeta_odd
from .families import SeriesFamily

logger = logging.getLogger(__name__)

# fastest decay last; terms must not increase along this order
DECAY_ORDER = (
    SeriesFamily.EWELL,
    SeriesFamily.CK,
    SeriesFamily.M3,
    SeriesFamily.M4,
    SeriesFamily.M6,
)


@dataclass(frozen=True)
class BenchRow:
    """One benchmark measurement."""

    family: SeriesFamily
    r: int
    digits: int
    terms_used: int
    tail_bound: Real
    wall_ms: float
    value: Real
    certified_digits: int


def _measure(family: SeriesFamily, r: int, ctx: PrecisionContext) -> BenchRow:
    started = time.perf_counter()
    report = zeta_odd(r, family, ctx)
    wall_ms = (time.perf_counter() - started) * 1000
    logger.debug("bench %s r=%d: %d terms in %.1f ms", family.value, r, report.terms_used, wall_ms)
    return BenchRow(
        family=family,
        r=r,
        digits=ctx.target_digits,
        terms_used=report.terms_used,
        tail_bound=report.tail_bound,
        wall_ms=wall_ms,
        value=report.value,
        certified_digits=report.certified_digits,
    )


def bench(
    families: Sequence[SeriesFamily],
    digits: int,
    r: int = 1,
    max_workers: int = 4,
) -> list[BenchRow]:
    """
    Time each family to the target digits.

    Families run concurrently, each worker on its own precision context;
    rows come back in the order requested.

    Args:
        families: Families to measure (Ewell only for r = 1)
        digits: Target decimal digits
        r: Order, computing ζ(2r+1)
        max_workers: Thread pool size

    Returns:
        One BenchRow per family
    """
    ctx = make_context(digits)
    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as executor:
        futures = [executor.submit(_measure, family, r, ctx.extended(0)) for family in families]
        return [future.result() for future in futures]


def terms_ordering_holds(rows: Sequence[BenchRow]) -> bool:
    """
    Check that faster-decaying families never need more terms.

    Rows are compared pairwise along Ewell/CK → M3 → M4 → M6 for equal r
    and digits.
    """
    rank = {family: i for i, family in enumerate(DECAY_ORDER)}
    ordered = sorted(rows, key=lambda row: (row.r, row.digits, rank[row.family]))
    for before, after in zip(ordered, ordered[1:]):
        if (before.r, before.digits) != (after.r, after.digits):
            continue
        if after.terms_used > before.terms_used:
            return False
    return True
