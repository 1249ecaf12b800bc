"""Tests for the odd zeta series families, evaluators, trace and bench."""

import random
import sys
from dataclasses import replace
from fractions import Fraction
from unittest.mock import patch

import pytest

from oddzeta.errors import ConfigurationError, PrecisionShortfallError
from oddzeta.numeric import PrecisionContext, agreeing_digits
from oddzeta.series import (
    SeriesFamily,
    TailKernel,
    bench,
    ck_coefficients,
    ck_recurrence,
    convergence_trace,
    ewell_coefficients,
    ewell_zeta3,
    family_coefficients,
    recurrence_coefficients,
    run_ladder,
    series_term,
    tail_bound,
    terms_ordering_holds,
    zeta3_coefficients,
    zeta3_family,
    zeta_odd,
    zeta_odd_ladder,
)
from oddzeta.series.bench import DECAY_ORDER, _measure

ZETA3_PREFIX = "1.2020569031595942853997"


class TestCoefficients:
    """Exact coefficients against the published specializations."""

    def test_ck_order_one_is_ewell(self) -> None:
        """The CK recurrence at r = 1 is Ewell's formula."""
        assert ck_coefficients(1) == ewell_coefficients()
        assert ewell_coefficients().tail_scale == Fraction(-4, 7)

    def test_ck_order_two(self) -> None:
        """ζ(5) = 4π²/31·ζ(3) + 8π⁴/31·Σ..."""
        coeffs = ck_coefficients(2)
        assert coeffs.collected() == {1: Fraction(4, 31)}
        assert coeffs.tail_scale == Fraction(8, 31)

    @pytest.mark.parametrize(
        ("r", "m", "collected", "tail"),
        [
            (2, 3, {1: Fraction(41, 363)}, Fraction(8, 363)),
            (2, 4, {1: Fraction(157, 1581)}, Fraction(16, 1581)),
            (2, 6, {1: Fraction(8, 87)}, Fraction(1, 261)),
            (3, 3, {1: Fraction(2188, 16395), 2: Fraction(-18, 5465)}, Fraction(-64, 16395)),
            (
                3,
                4,
                {1: Fraction(14306, 123825), 2: Fraction(-64, 41275)},
                Fraction(-128, 123825),
            ),
            (3, 6, {1: Fraction(3124, 29655), 2: Fraction(-2, 3295)}, Fraction(-16, 88965)),
        ],
    )
    def test_twisted_recurrences(
        self, r: int, m: int, collected: dict[int, Fraction], tail: Fraction
    ) -> None:
        """Collected multipliers of π^(2j)·ζ(2r+1-2j) and the tail scale."""
        coeffs = recurrence_coefficients(r, m)
        assert coeffs.collected() == collected
        assert coeffs.tail_scale == tail
        assert coeffs.kernel is TailKernel.TWISTED

    def test_zeta3_log_terms(self) -> None:
        """m = 6 has no logarithm; m = 3 and 4 do."""
        assert zeta3_coefficients(6).log_coeff == 0
        assert zeta3_coefficients(3).log_argument == 3
        assert zeta3_coefficients(4).log_argument == 2
        assert zeta3_coefficients(4).log_coeff != 0

    def test_invalid_orders(self) -> None:
        """Unsupported r and m are configuration errors."""
        with pytest.raises(ConfigurationError):
            ck_coefficients(0)
        with pytest.raises(ConfigurationError):
            recurrence_coefficients(1, 3)
        with pytest.raises(ConfigurationError):
            recurrence_coefficients(2, 5)
        with pytest.raises(ConfigurationError):
            zeta3_coefficients(9)
        with pytest.raises(ConfigurationError, match="ck family"):
            family_coefficients(SeriesFamily.EWELL, 2)

    def test_for_modulus(self) -> None:
        """Twisted families are looked up by modulus."""
        assert SeriesFamily.for_modulus(4) is SeriesFamily.M4
        with pytest.raises(ConfigurationError):
            SeriesFamily.for_modulus(5)


class TestZeta3:
    """Tests for the ζ(3) evaluators."""

    def test_ewell(self, ctx50: PrecisionContext) -> None:
        """Ewell reaches 50 digits in at most 90 terms."""
        report = ewell_zeta3(ctx50)
        assert report.certified_digits == 50
        assert report.terms_used <= 90
        assert ctx50.mp.nstr(report.value, 23).startswith(ZETA3_PREFIX)

    @pytest.mark.parametrize(("m", "max_terms"), [(3, 60), (4, 45), (6, 35)])
    def test_twisted_families(self, ctx50: PrecisionContext, m: int, max_terms: int) -> None:
        """Faster decay needs fewer terms and agrees with the reference."""
        report = zeta3_family(m, ctx50)
        assert report.certified_digits == 50
        assert report.terms_used <= max_terms
        assert agreeing_digits(report.value, ctx50.mp.zeta(3), 50, ctx50) >= 49

    def test_unsupported_modulus(self, ctx30: PrecisionContext) -> None:
        """Only m in {3, 4, 6} has a series."""
        with pytest.raises(ConfigurationError):
            zeta3_family(5, ctx30)


class TestLadder:
    """Tests for higher odd values."""

    @pytest.mark.parametrize("family", [SeriesFamily.CK, SeriesFamily.M3, SeriesFamily.M6])
    def test_ladder_matches_reference(self, ctx50: PrecisionContext, family: SeriesFamily) -> None:
        """ζ(3), ζ(5), ζ(7) all agree with mpmath."""
        reports = zeta_odd_ladder(3, family, ctx50)
        assert [rep.argument for rep in reports] == [3, 5, 7]
        for rep in reports:
            assert rep.certified_digits >= 48
            assert agreeing_digits(rep.value, ctx50.mp.zeta(rep.argument), 50, ctx50) >= 48

    def test_m6_ladder_to_r10(self, ctx50: PrecisionContext) -> None:
        """ζ(3) through ζ(21) from the m = 6 family hold 40 digits throughout."""
        reports = zeta_odd_ladder(10, SeriesFamily.M6, ctx50)
        assert [rep.argument for rep in reports] == list(range(3, 23, 2))
        for rep in reports:
            assert rep.certified_digits >= 40
            assert agreeing_digits(rep.value, ctx50.mp.zeta(rep.argument), 50, ctx50) >= 40

    def test_zeta_odd_is_top_of_ladder(self, ctx30: PrecisionContext) -> None:
        """zeta_odd returns the last ladder rung."""
        report = zeta_odd(2, SeriesFamily.M4, ctx30)
        assert report.r == 2
        assert abs(report.value - ctx30.mp.zeta(5)) < ctx30.mp.mpf(10) ** -28

    def test_ck_recurrence(self, ctx30: PrecisionContext) -> None:
        """The CK recurrence consumes lower values in order."""
        zeta3 = ewell_zeta3(ctx30)
        zeta5 = ck_recurrence(2, [zeta3], ctx30)
        assert abs(zeta5.value - ctx30.mp.zeta(5)) < ctx30.mp.mpf(10) ** -28
        with pytest.raises(ConfigurationError, match="lower values"):
            ck_recurrence(3, [zeta3], ctx30)

    def test_ewell_ladder_rejected(self, ctx30: PrecisionContext) -> None:
        """Ewell has no r > 1."""
        with pytest.raises(ConfigurationError):
            run_ladder(SeriesFamily.EWELL, 2, ctx30)

    def test_shortfall(self, ctx30: PrecisionContext) -> None:
        """A term cap that cannot be met raises PrecisionShortfallError."""
        with patch("oddzeta.series.evaluators.TERMS_PER_DIGIT_CAP", 0):
            with pytest.raises(PrecisionShortfallError):
                ewell_zeta3(ctx30)


class TestTailBound:
    """The tail bound must majorize the actual remainder."""

    @pytest.mark.parametrize(
        ("family", "r"),
        [(SeriesFamily.EWELL, 1), (SeriesFamily.M3, 1), (SeriesFamily.M4, 2), (SeriesFamily.CK, 3)],
    )
    def test_bound_is_sound(self, ctx30: PrecisionContext, family: SeriesFamily, r: int) -> None:
        """Σ_{k>=K} |term_k| never exceeds the bound at K."""
        k_start = 5
        remainder = ctx30.mp.fsum(
            abs(series_term(family, r, k, ctx30)) for k in range(k_start, k_start + 80)
        )
        assert remainder <= tail_bound(family, r, k_start, ctx30)

    def test_random_cases_against_wide_reference(self, ctx30: PrecisionContext) -> None:
        """50 random (family, r, k_start) remainders, summed at doubled precision."""
        wide = PrecisionContext.from_bits(2 * ctx30.working_bits)
        rng = random.Random(314159)
        families = list(DECAY_ORDER)
        for _ in range(50):
            family = rng.choice(families)
            r = 1 if family is SeriesFamily.EWELL else rng.randint(1, 5)
            k_start = rng.randint(1, 25)
            remainder = wide.mp.fsum(
                series_term(family, r, k, wide) for k in range(k_start, k_start + 60)
            )
            assert abs(remainder) <= tail_bound(family, r, k_start, ctx30), (family, r, k_start)

    def test_bound_decreases(self, ctx30: PrecisionContext) -> None:
        """Later starts give smaller bounds."""
        bounds = [tail_bound(SeriesFamily.M6, 1, k, ctx30) for k in (1, 5, 10)]
        assert bounds[0] > bounds[1] > bounds[2]

    def test_rejects_zero_start(self, ctx30: PrecisionContext) -> None:
        """k_start must be at least 1."""
        with pytest.raises(ConfigurationError):
            tail_bound(SeriesFamily.CK, 1, 0, ctx30)


class TestConvergenceTrace:
    """Tests for decay telemetry."""

    @pytest.mark.parametrize(
        ("family", "r"),
        [(SeriesFamily.CK, 1), (SeriesFamily.M3, 1), (SeriesFamily.M4, 2), (SeriesFamily.M6, 3)],
    )
    def test_fitted_ratio_matches_modulus(
        self, ctx30: PrecisionContext, family: SeriesFamily, r: int
    ) -> None:
        """The fitted ratio is within 5% of m^-2."""
        trace = convergence_trace(family, r, (20, 40), ctx30)
        assert trace.expected_ratio == Fraction(1, family.m**2)
        assert trace.relative_deviation() < 0.05
        assert trace.raw_ratio < trace.fitted_ratio
        assert len(trace.term_magnitudes) == 21

    def test_empty_range(self, ctx30: PrecisionContext) -> None:
        """The range needs start < stop."""
        with pytest.raises(ConfigurationError):
            convergence_trace(SeriesFamily.CK, 1, (10, 10), ctx30)


class TestBench:
    """Tests for the terms-to-digits benchmark."""

    def test_rows_in_request_order(self) -> None:
        """Rows come back in the order asked for, within 25 terms at 10 digits."""
        families = list(reversed(DECAY_ORDER))
        rows = bench(families, digits=10, max_workers=2)
        assert [row.family for row in rows] == families
        assert all(row.terms_used <= 25 for row in rows)
        assert all(row.digits == 10 for row in rows)
        assert terms_ordering_holds(rows)

    def test_faster_decay_needs_fewer_terms(self) -> None:
        """M6 needs fewer terms than CK for ζ(5)."""
        rows = bench([SeriesFamily.CK, SeriesFamily.M6], digits=30, r=2)
        assert rows[1].terms_used < rows[0].terms_used

    def test_ordering_violation_detected(self) -> None:
        """A slower family beating a faster one fails the check."""
        rows = bench([SeriesFamily.M3, SeriesFamily.M6], digits=10)
        slower = replace(rows[1], terms_used=rows[0].terms_used + 1)
        assert not terms_ordering_holds([rows[0], slower])

    def test_workers_get_own_context(self) -> None:
        """Each family is measured on a separate precision context."""
        with patch.object(sys.modules["oddzeta.series.bench"], "_measure", wraps=_measure) as measure:
            bench([SeriesFamily.M3, SeriesFamily.M6], digits=10)
        contexts = [call.args[2] for call in measure.call_args_list]
        assert len(contexts) == 2
        assert contexts[0] is not contexts[1]
        assert contexts[0].mp is not contexts[1].mp
        assert all(c.target_digits == 10 for c in contexts)
