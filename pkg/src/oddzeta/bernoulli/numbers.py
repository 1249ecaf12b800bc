"""Exact Bernoulli numbers, Bernoulli polynomials and harmonic numbers."""

import logging
import threading
from collections.abc import Iterable
from fractions import Fraction
from math import comb, prod

from ..errors import CacheIntegrityError

logger = logging.getLogger(__name__)

B1 = Fraction(-1, 2)


class BernoulliCache:
    """
    Grow-once table of Bernoulli numbers B_0, B_1, ... as exact Fractions.

    Only even indices are stored; B_1 = -1/2 and the odd entries from 3 on are
    zero. Growth takes a lock, so one writer and any number of readers of
    indices at or below ``high_water`` can share an instance.
    """

    def __init__(self, even_entries: Iterable[Fraction] = ()) -> None:
        """
        Initialize cache.

        Args:
            even_entries: B_0, B_2, B_4, ... in order (may be empty)
        """
        self._even: list[Fraction] = [Fraction(b) for b in even_entries]
        self._lock = threading.Lock()

    @property
    def high_water(self) -> int:
        """Largest index computed, or -1 when empty."""
        if not self._even:
            return -1
        return 2 * (len(self._even) - 1)

    @property
    def even_entries(self) -> list[Fraction]:
        """Stored B_0, B_2, ..., B_high_water."""
        return list(self._even)

    @property
    def entries(self) -> list[Fraction]:
        """B_0 ... B_high_water including the implicit odd entries."""
        return [self._lookup(n) for n in range(self.high_water + 1)]

    def _lookup(self, n: int) -> Fraction:
        if n == 1:
            return B1
        if n % 2:
            return Fraction(0)
        return self._even[n // 2]

    def extend_to(self, n: int) -> None:
        """
        Make sure every index up to ``n`` is available.

        Entries below the current high-water mark are never recomputed.

        Args:
            n: Index to reach
        """
        target = n + (n % 2)
        if target <= self.high_water:
            return
        with self._lock:
            start = self.high_water
            if not self._even:
                self._even.append(Fraction(1))
            while 2 * (len(self._even) - 1) < target:
                m = 2 * len(self._even)
                # sum_{j<m} C(m+1, j) B_j with B_1 and the zero odd terms folded in
                total = comb(m + 1, 1) * B1
                for i, b in enumerate(self._even):
                    total += comb(m + 1, 2 * i) * b
                self._even.append(-total / (m + 1))
            logger.debug("bernoulli cache grown from %d to %d", start, self.high_water)

    def get(self, n: int) -> Fraction:
        """
        Return B_n, growing the cache if needed.

        Args:
            n: Non-negative index

        Returns:
            Exact B_n

        Raises:
            ValueError: If n is negative
        """
        if n < 0:
            raise ValueError(f"Bernoulli index must be non-negative, got {n}")
        self.extend_to(n)
        return self._lookup(n)

    def recurrence_residual(self, n: int) -> Fraction:
        """sum_{j=0}^{n} C(n+1, j) B_j for a cached n >= 1; zero when consistent."""
        return sum(
            (comb(n + 1, j) * self._lookup(j) for j in range(n + 1)), start=Fraction(0)
        )

    def validate(self) -> None:
        """
        Re-check every stored entry against the defining recurrence.

        Raises:
            CacheIntegrityError: On the first index whose recurrence fails
        """
        if not self._even:
            return
        if self._even[0] != 1:
            raise CacheIntegrityError(f"B_0 must be 1, found {self._even[0]}")
        for n in range(1, self.high_water + 1):
            residual = self.recurrence_residual(n)
            if residual != 0:
                raise CacheIntegrityError(
                    f"recurrence fails at n={n} (residual {residual}); cache is corrupt"
                )

    def __len__(self) -> int:
        return self.high_water + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BernoulliCache):
            return NotImplemented
        return self._even == other._even


class HarmonicTable:
    """Grow-once table of harmonic numbers H_0 = 0, H_1 = 1, H_2 = 3/2, ..."""

    def __init__(self) -> None:
        self._entries: list[Fraction] = [Fraction(0)]
        self._lock = threading.Lock()

    @property
    def entries(self) -> list[Fraction]:
        return list(self._entries)

    def get(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError(f"harmonic index must be non-negative, got {m}")
        if m >= len(self._entries):
            with self._lock:
                while len(self._entries) <= m:
                    j = len(self._entries)
                    self._entries.append(self._entries[-1] + Fraction(1, j))
        return self._entries[m]


_default_cache = BernoulliCache()
_default_harmonics = HarmonicTable()


def default_cache() -> BernoulliCache:
    """Process-wide cache used when callers do not pass their own."""
    return _default_cache


def set_default_cache(cache: BernoulliCache) -> None:
    """Replace the process-wide cache, e.g. with one loaded from disk."""
    global _default_cache
    _default_cache = cache


def bernoulli_number(n: int, cache: BernoulliCache | None = None) -> Fraction:
    """
    Exact Bernoulli number B_n (convention B_1 = -1/2).

    Args:
        n: Non-negative index
        cache: Cache to read and grow; defaults to the process-wide cache

    Returns:
        B_n as a Fraction
    """
    return (cache if cache is not None else _default_cache).get(n)


def bernoulli_polynomial(
    n: int, x: Fraction | int, cache: BernoulliCache | None = None
) -> Fraction:
    """
    Evaluate B_n(x) = sum_k C(n, k) B_k x^(n-k) exactly.

    Args:
        n: Degree
        x: Rational argument
        cache: Bernoulli cache to use

    Returns:
        Exact value
    """
    if n < 0:
        raise ValueError(f"Bernoulli polynomial degree must be non-negative, got {n}")
    x = Fraction(x)
    return sum(
        (comb(n, k) * bernoulli_number(k, cache) * x ** (n - k) for k in range(n + 1)),
        start=Fraction(0),
    )


def harmonic(m: int) -> Fraction:
    """Exact harmonic number H_m; H_0 = 0."""
    return _default_harmonics.get(m)


def _primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p, flag in enumerate(sieve) if flag]


def von_staudt_denominator(n: int) -> int:
    """
    Denominator of B_n predicted by von Staudt–Clausen for even n >= 2.

    Args:
        n: Even index

    Returns:
        Product of the primes p with (p - 1) dividing n
    """
    if n < 2 or n % 2:
        raise ValueError(f"von Staudt–Clausen applies to even n >= 2, got {n}")
    return prod(p for p in _primes_up_to(n + 1) if n % (p - 1) == 0)
