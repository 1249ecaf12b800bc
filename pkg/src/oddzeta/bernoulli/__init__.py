"""Exact Bernoulli numbers, Bernoulli polynomials and harmonic numbers."""

from .cache_file import (
    CACHE_HEADER,
    CACHE_PATH_ENV,
    default_cache_path,
    dumps_cache,
    load_cache,
    loads_cache,
    precompute,
    save_cache,
)
from .numbers import (
    BernoulliCache,
    HarmonicTable,
    bernoulli_number,
    bernoulli_polynomial,
    default_cache,
    harmonic,
    set_default_cache,
    von_staudt_denominator,
)

__all__ = [
    "CACHE_HEADER",
    "CACHE_PATH_ENV",
    "BernoulliCache",
    "HarmonicTable",
    "bernoulli_number",
    "bernoulli_polynomial",
    "default_cache",
    "default_cache_path",
    "dumps_cache",
    "harmonic",
    "load_cache",
    "loads_cache",
    "precompute",
    "save_cache",
    "set_default_cache",
    "von_staudt_denominator",
]
