"""Tests for Bernoulli numbers and the on-disk cache."""

from fractions import Fraction
from pathlib import Path

import pytest

from oddzeta.bernoulli import (
    CACHE_HEADER,
    BernoulliCache,
    bernoulli_number,
    bernoulli_polynomial,
    default_cache_path,
    dumps_cache,
    harmonic,
    load_cache,
    loads_cache,
    precompute,
    save_cache,
    von_staudt_denominator,
)
from oddzeta.errors import CacheFormatError, CacheIntegrityError, CacheVersionError


class TestBernoulliNumbers:
    """Tests for bernoulli_number."""

    @pytest.mark.parametrize(
        "n, expected",
        [
            (0, Fraction(1)),
            (1, Fraction(-1, 2)),
            (2, Fraction(1, 6)),
            (3, Fraction(0)),
            (4, Fraction(-1, 30)),
            (12, Fraction(-691, 2730)),
            (20, Fraction(-174611, 330)),
        ],
    )
    def test_known_values(self, n: int, expected: Fraction) -> None:
        """Small Bernoulli numbers match their tabulated values."""
        assert bernoulli_number(n, BernoulliCache()) == expected

    def test_odd_indices_vanish(self) -> None:
        """B_n = 0 for odd n >= 3."""
        cache = BernoulliCache()
        assert all(bernoulli_number(n, cache) == 0 for n in range(3, 40, 2))

    def test_negative_index(self) -> None:
        """Negative indices are rejected."""
        with pytest.raises(ValueError):
            bernoulli_number(-2, BernoulliCache())

    def test_von_staudt_clausen(self) -> None:
        """Denominators match the product of primes p with (p - 1) | 2k."""
        cache = BernoulliCache()
        for n in range(2, 81, 2):
            assert bernoulli_number(n, cache).denominator == von_staudt_denominator(n)

    def test_von_staudt_rejects_odd(self) -> None:
        """The denominator rule is stated for even indices only."""
        with pytest.raises(ValueError):
            von_staudt_denominator(7)

    def test_passed_cache_is_used(self) -> None:
        """An empty cache handed in is grown, not bypassed."""
        cache = BernoulliCache()
        assert bernoulli_number(10, cache) == Fraction(5, 66)
        assert cache.high_water >= 10

    def test_polynomial_uses_passed_cache(self) -> None:
        """bernoulli_polynomial grows the cache it is given."""
        cache = BernoulliCache()
        bernoulli_polynomial(6, Fraction(1, 3), cache)
        assert cache.high_water >= 6


class TestBernoulliCache:
    """Tests for BernoulliCache growth and validation."""

    def test_grow_once(self) -> None:
        """Growth keeps earlier entries and only moves the high-water mark up."""
        cache = BernoulliCache()
        cache.extend_to(10)
        first = cache.even_entries
        cache.extend_to(6)
        assert cache.high_water == 10
        cache.extend_to(21)
        assert cache.high_water == 22
        assert cache.even_entries[: len(first)] == first

    def test_validate_passes(self) -> None:
        """A computed cache satisfies the recurrence."""
        cache = BernoulliCache()
        cache.extend_to(40)
        cache.validate()

    def test_validate_detects_corruption(self) -> None:
        """A single wrong entry is caught."""
        cache = BernoulliCache()
        cache.extend_to(10)
        entries = cache.even_entries
        entries[3] = entries[3] + Fraction(1, 7)
        with pytest.raises(CacheIntegrityError, match="n=6"):
            BernoulliCache(entries).validate()

    def test_polynomial(self) -> None:
        """B_2(1/2) = -1/12 and B_n(1) = B_n for n >= 2."""
        assert bernoulli_polynomial(2, Fraction(1, 2)) == Fraction(-1, 12)
        assert bernoulli_polynomial(4, 1) == bernoulli_number(4)

    def test_harmonic(self) -> None:
        """H_4 = 25/12."""
        assert harmonic(0) == 0
        assert harmonic(4) == Fraction(25, 12)

    def test_harmonic_telescopes(self) -> None:
        """H_m - H_(m-1) = 1/m exactly up to m = 1000."""
        assert all(harmonic(m) - harmonic(m - 1) == Fraction(1, m) for m in range(1, 1001))

    def test_recurrence_residual_to_200(self) -> None:
        """sum_{j<=n} C(n+1, j) B_j vanishes for every n up to 200."""
        cache = BernoulliCache()
        cache.extend_to(200)
        assert all(cache.recurrence_residual(n) == 0 for n in range(1, 201))

    def test_polynomial_telescopes(self) -> None:
        """B_n(1) - B_n(0) is 1 for n = 1 and 0 for n >= 2."""
        cache = BernoulliCache()
        assert bernoulli_polynomial(1, 1, cache) - bernoulli_polynomial(1, 0, cache) == 1
        for n in range(2, 30):
            assert bernoulli_polynomial(n, 1, cache) == bernoulli_polynomial(n, 0, cache)


class TestCacheFile:
    """Tests for the cache file format."""

    def test_precompute_counts(self, tmp_path: Path) -> None:
        """Precomputing to 200 writes 101 even-index records."""
        path = tmp_path / "bernoulli.tsv"
        precompute(200, path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == CACHE_HEADER
        assert len(lines) == 102
        assert lines[2] == "2\t1\t6"

    def test_precompute_idempotent(self, tmp_path: Path) -> None:
        """Repeated precompute leaves identical bytes."""
        path = tmp_path / "bernoulli.tsv"
        precompute(60, path)
        before = path.read_bytes()
        precompute(60, path)
        precompute(20, path)
        assert path.read_bytes() == before

    def test_save_and_load(self, tmp_path: Path) -> None:
        """A saved cache loads back equal."""
        cache = BernoulliCache()
        cache.extend_to(30)
        path = save_cache(cache, tmp_path / "nested" / "b.tsv")
        assert load_cache(path) == cache

    def test_missing_file(self, tmp_path: Path) -> None:
        """Loading a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_cache(tmp_path / "absent.tsv")

    def test_empty_text(self) -> None:
        """An empty file is an empty cache."""
        assert loads_cache("").high_water == -1

    def test_bad_header(self) -> None:
        """A missing header is reported on line 1."""
        with pytest.raises(CacheFormatError) as excinfo:
            loads_cache("0\t1\t1\n")
        assert excinfo.value.line == 1

    def test_wrong_version(self) -> None:
        """Another version is rejected with CacheVersionError."""
        with pytest.raises(CacheVersionError):
            loads_cache("bernoulli-cache v9\n0\t1\t1\n")

    def test_malformed_line_number(self) -> None:
        """Malformed records name their 1-based line."""
        text = f"{CACHE_HEADER}\n0\t1\t1\n2\t1\n"
        with pytest.raises(CacheFormatError) as excinfo:
            loads_cache(text)
        assert excinfo.value.line == 3

    def test_non_canonical(self) -> None:
        """Unreduced fractions are rejected."""
        text = f"{CACHE_HEADER}\n0\t1\t1\n2\t2\t12\n"
        with pytest.raises(CacheFormatError, match="canonical"):
            loads_cache(text)

    def test_corrupt_value(self) -> None:
        """Well-formed but wrong values fail the recurrence check."""
        cache = BernoulliCache()
        cache.extend_to(8)
        text = dumps_cache(cache).replace("4\t-1\t30", "4\t-1\t31")
        with pytest.raises(CacheIntegrityError):
            loads_cache(text)

    def test_default_path_env(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        """ODDZETA_CACHE_PATH overrides the home-directory default."""
        monkeypatch.setenv("ODDZETA_CACHE_PATH", str(tmp_path / "b.tsv"))
        assert default_cache_path() == tmp_path / "b.tsv"

    def test_default_path_home(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Without the variable the cache lives under ~/.oddzeta."""
        monkeypatch.delenv("ODDZETA_CACHE_PATH", raising=False)
        assert default_cache_path() == Path.home() / ".oddzeta" / "bernoulli.tsv"
