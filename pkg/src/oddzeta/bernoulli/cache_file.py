"""Persistent Bernoulli cache: a line-oriented, bit-exact text file."""

import logging
import os
from fractions import Fraction
from math import gcd
from pathlib import Path

from ..errors import CacheFormatError, CacheVersionError
from .numbers import BernoulliCache

logger = logging.getLogger(__name__)

CACHE_HEADER_PREFIX = "bernoulli-cache"
CACHE_VERSION = "v1"
CACHE_HEADER = f"{CACHE_HEADER_PREFIX} {CACHE_VERSION}"
CACHE_PATH_ENV = "ODDZETA_CACHE_PATH"


def default_cache_path() -> Path:
    """Cache location from ``ODDZETA_CACHE_PATH`` or ``~/.oddzeta/bernoulli.tsv``."""
    override = os.getenv(CACHE_PATH_ENV)
    if override:
        return Path(override).expanduser()
    return Path.home() / ".oddzeta" / "bernoulli.tsv"


def dumps_cache(cache: BernoulliCache) -> str:
    """Serialise the even entries of ``cache`` to the v1 text format."""
    lines = [CACHE_HEADER]
    for i, b in enumerate(cache.even_entries):
        lines.append(f"{2 * i}\t{b.numerator}\t{b.denominator}")
    return "\n".join(lines) + "\n"


def loads_cache(text: str) -> BernoulliCache:
    """
    Parse the v1 text format and validate the result.

    Args:
        text: File contents

    Returns:
        Validated cache; an empty text yields an empty cache

    Raises:
        CacheVersionError: If the header names another version
        CacheFormatError: On any malformed line, naming its line number
        CacheIntegrityError: If the entries break the Bernoulli recurrence
    """
    lines = text.splitlines()
    if not any(line.strip() for line in lines):
        return BernoulliCache()

    header = lines[0].strip()
    if header != CACHE_HEADER:
        if header.startswith(CACHE_HEADER_PREFIX):
            raise CacheVersionError(
                f"unsupported cache version {header[len(CACHE_HEADER_PREFIX):].strip()!r}, "
                f"expected {CACHE_VERSION!r}",
                line=1,
            )
        raise CacheFormatError(f"missing header {CACHE_HEADER!r}", line=1)

    entries: list[Fraction] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        fields = raw.split("\t")
        if len(fields) != 3:
            raise CacheFormatError(
                f"expected 3 tab-separated fields, found {len(fields)}", line=lineno
            )
        try:
            n, num, den = (int(field) for field in fields)
        except ValueError as e:
            raise CacheFormatError(f"non-integer field in {raw!r}", line=lineno) from e
        expected = 2 * len(entries)
        if n != expected:
            raise CacheFormatError(f"expected index {expected}, found {n}", line=lineno)
        if den <= 0 or gcd(num, den) != 1:
            raise CacheFormatError(f"{num}/{den} is not in canonical form", line=lineno)
        entries.append(Fraction(num, den))

    cache = BernoulliCache(entries)
    cache.validate()
    return cache


def save_cache(cache: BernoulliCache, path: str | Path) -> Path:
    """
    Write ``cache`` to ``path`` atomically.

    Args:
        cache: Cache to persist
        path: Destination file; parent directories are created

    Returns:
        Path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp_path = path.with_name(path.name + ".tmp")
    with open(tmp_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps_cache(cache))
    os.replace(tmp_path, path)
    logger.debug("wrote bernoulli cache (high water %d) to %s", cache.high_water, path)
    return path


def load_cache(path: str | Path) -> BernoulliCache:
    """
    Read and validate a cache file.

    Args:
        path: File to read

    Returns:
        Validated cache

    Raises:
        FileNotFoundError: If the file does not exist
        CacheFormatError: If the file cannot be parsed
        CacheIntegrityError: If an entry is wrong
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Bernoulli cache not found at {path}")
    with open(path, encoding="utf-8") as f:
        return loads_cache(f.read())


def precompute(n: int, path: str | Path | None = None) -> BernoulliCache:
    """
    Grow the on-disk cache so it covers every index up to ``n``.

    An existing file is loaded (and validated) first and never shrunk;
    the file is only rewritten when new entries were added, so repeated
    calls leave identical bytes.

    Args:
        n: Highest index needed
        path: Cache file; defaults to :func:`default_cache_path`

    Returns:
        The cache now on disk
    """
    path = Path(path) if path else default_cache_path()
    cache = load_cache(path) if path.exists() else BernoulliCache()
    before = cache.high_water
    cache.extend_to(n)
    if not path.exists():
        save_cache(cache, path)
    elif cache.high_water != before:
        logger.warning(
            "rewriting bernoulli cache %s: high water %d -> %d", path, before, cache.high_water
        )
        save_cache(cache, path)
    else:
        logger.debug("bernoulli cache at %s already covers n=%d", path, n)
    return cache
