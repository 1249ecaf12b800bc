"""Run settings: defaults, an optional YAML file and the cache-path environment variable."""

import logging
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .bernoulli import CACHE_PATH_ENV, default_cache_path
from .errors import ConfigurationError
from .numeric import DEFAULT_GUARD_BITS, PrecisionContext, make_context

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    """
    Settings shared by every CLI verb.

    Attributes:
        digits: Target decimal digits
        guard_bits: Working bits beyond the target
        cache_path: Bernoulli cache file
        max_workers: Threads for bench and verify batches
        fourier_terms: Default N for identity cases
        power_terms: Default K for identity cases
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    digits: int = Field(default=50, ge=1, le=10**6)
    guard_bits: int = Field(default=DEFAULT_GUARD_BITS, ge=32)
    cache_path: Path = Field(default_factory=default_cache_path)
    max_workers: int = Field(default=4, ge=1)
    fourier_terms: int = Field(default=10_000, ge=1)
    power_terms: int = Field(default=60, ge=1)

    def context(self) -> PrecisionContext:
        """Precision context for ``digits`` and ``guard_bits``."""
        return make_context(self.digits, self.guard_bits)

    def with_overrides(self, **overrides: Any) -> "Settings":
        """
        Copy with explicit values applied; None means "not given".

        Raises:
            ConfigurationError: If an override is invalid
        """
        given = {key: value for key, value in overrides.items() if value is not None}
        if not given:
            return self
        try:
            return Settings.model_validate({**self.model_dump(), **given})
        except ValidationError as e:
            raise ConfigurationError(f"invalid setting: {e}") from e


def load_settings(config_path: str | Path | None = None) -> Settings:
    """
    Build settings from defaults and an optional YAML file.

    ``ODDZETA_CACHE_PATH`` overrides the cache path from the file.

    Args:
        config_path: YAML mapping of Settings fields

    Returns:
        Validated settings

    Raises:
        ConfigurationError: If the file is missing, unreadable, not a mapping,
            or holds unknown keys or invalid values
    """
    if config_path is None:
        return Settings()
    path = Path(config_path)
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigurationError(f"config file {path} is not valid YAML: {e}") from e

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigurationError(
            f"config file {path} must hold a mapping, got {type(data).__name__}"
        )
    try:
        settings = Settings.model_validate(data)
    except ValidationError as e:
        raise ConfigurationError(f"invalid config file {path}: {e}") from e
    logger.debug("loaded settings from %s", path)
    if os.getenv(CACHE_PATH_ENV):
        settings = settings.with_overrides(cache_path=default_cache_path())
    return settings
