"""Shared fixtures."""

from collections.abc import Iterator

import pytest

from oddzeta.bernoulli import BernoulliCache, default_cache, set_default_cache
from oddzeta.numeric import PrecisionContext, make_context


@pytest.fixture
def ctx30() -> PrecisionContext:
    """30-digit context."""
    return make_context(30)


@pytest.fixture
def ctx50() -> PrecisionContext:
    """50-digit context."""
    return make_context(50)


@pytest.fixture
def fresh_bernoulli_cache() -> Iterator[BernoulliCache]:
    """Swap in an empty process-wide Bernoulli cache for one test."""
    saved = default_cache()
    cache = BernoulliCache()
    set_default_cache(cache)
    yield cache
    set_default_cache(saved)
