"""Tests for classical zeta values, the oracle and trigonometric sums."""

import random
from fractions import Fraction

import pytest

from oddzeta.errors import ConfigurationError, PoleError, PreconditionError
from oddzeta.numeric import PrecisionContext, agreeing_digits
from oddzeta.reference import (
    TrigKind,
    TrigSumSpec,
    character_factor,
    character_factor_exact,
    gamma_fn,
    log_sin_closed,
    sin_series_closed,
    trig_dirichlet,
    zeta_even,
    zeta_even_coefficient,
    zeta_nonpositive,
    zeta_oracle,
)


class TestZetaEven:
    """Tests for Euler's even values."""

    def test_coefficients(self) -> None:
        """ζ(2) = π²/6, ζ(4) = π⁴/90, ζ(6) = π⁶/945."""
        assert zeta_even_coefficient(1) == Fraction(1, 6)
        assert zeta_even_coefficient(2) == Fraction(1, 90)
        assert zeta_even_coefficient(3) == Fraction(1, 945)

    def test_value(self, ctx50: PrecisionContext) -> None:
        """The floating value equals q·π^(2n)."""
        value = zeta_even(5, ctx50)
        assert abs(value.value - ctx50.mp.zeta(10)) < ctx50.mp.mpf(10) ** -48

    def test_rejects_zero(self) -> None:
        """n must be positive."""
        with pytest.raises(ValueError):
            zeta_even_coefficient(0)


class TestZetaNonpositive:
    """Tests for exact values at non-positive integers."""

    def test_known_values(self) -> None:
        """ζ(0) = -1/2, ζ(-1) = -1/12, ζ(-3) = 1/120."""
        assert zeta_nonpositive(0) == Fraction(-1, 2)
        assert zeta_nonpositive(1) == Fraction(-1, 12)
        assert zeta_nonpositive(3) == Fraction(1, 120)

    def test_trivial_zeros(self) -> None:
        """ζ(-2k) = 0 for k = 1..10."""
        assert all(zeta_nonpositive(2 * k) == 0 for k in range(1, 11))


class TestZetaOracle:
    """Tests for the independent oracle."""

    @pytest.mark.parametrize("s", [2, 3, 5, 7, 11])
    def test_integer_arguments(self, ctx50: PrecisionContext, s: int) -> None:
        """Odd and even integer values match mpmath to the target."""
        value = zeta_oracle(s, ctx50)
        assert agreeing_digits(value, ctx50.mp.zeta(s), 50, ctx50) >= 48

    def test_zeta3_digits(self, ctx50: PrecisionContext) -> None:
        """ζ(3) begins 1.2020569031595942853997."""
        value = zeta_oracle(3, ctx50)
        assert ctx50.mp.nstr(value, 23).startswith("1.2020569031595942853997")

    def test_matches_even_values(self, ctx30: PrecisionContext) -> None:
        """The eta path reproduces ζ(2n) = q·π^(2n) for n = 1..20."""
        for n in range(1, 21):
            value = zeta_oracle(2 * n, ctx30)
            assert agreeing_digits(value, zeta_even(n, ctx30).value, 30, ctx30) >= 28

    def test_matches_nonpositive_values(self, ctx30: PrecisionContext) -> None:
        """The reflection path reproduces ζ(-n) for n = 0..15."""
        mp = ctx30.mp
        for n in range(16):
            exact = ctx30.real(zeta_nonpositive(n))
            error = abs(zeta_oracle(-n, ctx30) - exact)
            assert error <= mp.mpf(10) ** -27 * max(mp.mpf(1), abs(exact))

    def test_complex_argument(self, ctx30: PrecisionContext) -> None:
        """Complex arguments on the eta path match mpmath."""
        s = ctx30.mp.mpc(2.5, 1.5)
        assert abs(zeta_oracle(s, ctx30) - ctx30.mp.zeta(s)) < ctx30.mp.mpf(10) ** -27

    def test_reflection_path(self, ctx30: PrecisionContext) -> None:
        """Arguments left of the crossover go through the functional equation."""
        s = ctx30.mp.mpf("-2.5")
        assert abs(zeta_oracle(s, ctx30) - ctx30.mp.zeta(s)) < ctx30.mp.mpf(10) ** -27

    def test_nonpositive_integers(self, ctx30: PrecisionContext) -> None:
        """The reflection path reproduces the exact values."""
        mp = ctx30.mp
        assert zeta_oracle(0, ctx30) == mp.mpf(-1) / 2
        assert abs(zeta_oracle(-1, ctx30) + mp.mpf(1) / 12) < mp.mpf(10) ** -28
        for k in range(1, 11):
            assert abs(zeta_oracle(-2 * k, ctx30)) < mp.mpf(10) ** -28

    def test_pole(self, ctx30: PrecisionContext) -> None:
        """s = 1 is a pole."""
        with pytest.raises(PoleError):
            zeta_oracle(1, ctx30)

    def test_near_pole_needs_flag(self, ctx30: PrecisionContext) -> None:
        """Arguments within 1e-3 of the pole need near_pole=True."""
        with pytest.raises(PreconditionError, match="near_pole"):
            zeta_oracle(Fraction(1000001, 1000000), ctx30)

    @pytest.mark.parametrize("offset", [Fraction(1, 10**6), Fraction(-1, 10**6)])
    def test_residue(self, ctx30: PrecisionContext, offset: Fraction) -> None:
        """(s - 1)ζ(s) is within 2e-6 of 1 next to the pole."""
        value = ctx30.real(offset) * zeta_oracle(1 + offset, ctx30, near_pole=True)
        assert abs(value - 1) < 2 * ctx30.mp.mpf(10) ** -6


class TestGamma:
    """Tests for gamma_fn."""

    def test_factorial(self, ctx30: PrecisionContext) -> None:
        """Γ(5) = 24."""
        assert abs(gamma_fn(5, ctx30) - 24) < ctx30.mp.mpf(10) ** -27

    def test_half(self, ctx30: PrecisionContext) -> None:
        """Γ(1/2) = √π."""
        value = gamma_fn(Fraction(1, 2), ctx30)
        assert abs(value - ctx30.mp.sqrt(ctx30.pi)) < ctx30.mp.mpf(10) ** -27

    def test_complex(self, ctx30: PrecisionContext) -> None:
        """Complex arguments match mpmath."""
        z = ctx30.mp.mpc(-1.25, 3)
        assert abs(gamma_fn(z, ctx30) - ctx30.mp.gamma(z)) < ctx30.mp.mpf(10) ** -27

    def test_recurrence_at_random_points(self, ctx30: PrecisionContext) -> None:
        """Γ(z+1) = z·Γ(z) at 100 points with 0.5 < Re(z) < 10."""
        mp = ctx30.mp
        rng = random.Random(1729)
        for _ in range(100):
            z = mp.mpc(rng.uniform(0.5, 10), rng.uniform(-3, 3))
            lhs = gamma_fn(z + 1, ctx30)
            assert abs(lhs - z * gamma_fn(z, ctx30)) <= mp.mpf(10) ** -27 * abs(lhs)

    @pytest.mark.parametrize("z", [0, -1, -4])
    def test_poles(self, ctx30: PrecisionContext, z: int) -> None:
        """Non-positive integers are poles."""
        with pytest.raises(PoleError):
            gamma_fn(z, ctx30)


class TestTrigDirichlet:
    """Tests for trig_dirichlet and the closed forms."""

    def test_zero_angle(self, ctx30: PrecisionContext) -> None:
        """At θ = 0 the cosine sum is a zeta partial sum."""
        value, tail = trig_dirichlet(TrigSumSpec(theta=0, s=2, N=10), ctx30)
        expected = sum(ctx30.mp.mpf(1) / n**2 for n in range(1, 11))
        assert abs(value - expected) < ctx30.mp.mpf(10) ** -28
        assert tail == ctx30.mp.mpf(1) / 10

    def test_matches_direct_sum(self, ctx30: PrecisionContext) -> None:
        """The phasor recurrence agrees with direct cosines."""
        mp = ctx30.mp
        theta = ctx30.pi / 3
        value, _ = trig_dirichlet(TrigSumSpec(theta=theta, s=3, N=2000), ctx30)
        direct = mp.fsum(mp.cos(n * theta) / mp.mpf(n) ** 3 for n in range(1, 2001))
        assert abs(value - direct) < mp.mpf(10) ** -25

    def test_no_tail_at_s_one(self, ctx30: PrecisionContext) -> None:
        """Re(s) <= 1 gives no zeta-tail bound."""
        _, tail = trig_dirichlet(TrigSumSpec(theta=1, s=1, N=5, kind=TrigKind.SINE), ctx30)
        assert tail is None

    def test_negative_n(self) -> None:
        """N must be non-negative."""
        with pytest.raises(ConfigurationError):
            TrigSumSpec(theta=1, s=2, N=-1)

    def test_closed_forms(self, ctx30: PrecisionContext) -> None:
        """-ln(2 sin(π/2)) = -ln 2 and π/2 - π/4 = π/4."""
        mp = ctx30.mp
        assert abs(log_sin_closed(Fraction(1, 2), ctx30) + mp.log(2)) < mp.mpf(10) ** -28
        assert abs(sin_series_closed(Fraction(1, 4), ctx30) - ctx30.pi / 4) < mp.mpf(10) ** -28

    def test_closed_form_endpoints(self, ctx30: PrecisionContext) -> None:
        """The closed forms are undefined at 0 and 1."""
        with pytest.raises(PoleError):
            log_sin_closed(0, ctx30)
        with pytest.raises(PoleError):
            sin_series_closed(1, ctx30)


class TestCharacterFactor:
    """Tests for the twisted cosine multiplier."""

    @pytest.mark.parametrize("m", [3, 4, 6])
    def test_vanishes_at_one(self, m: int) -> None:
        """λ_m(1) = 0 for every modulus."""
        assert character_factor_exact(m, 1) == 0

    def test_quarter_turn(self) -> None:
        """Σ cos(πn/2)/n² = -ζ(2)/8."""
        assert character_factor_exact(4, 2) == Fraction(-1, 8)

    @pytest.mark.parametrize("m", [3, 4, 6])
    def test_float_matches_exact(self, ctx30: PrecisionContext, m: int) -> None:
        """The floating factor agrees with the exact one at integer s."""
        exact = ctx30.real(character_factor_exact(m, 5))
        assert abs(character_factor(m, 5, ctx30) - exact) < ctx30.mp.mpf(10) ** -28

    def test_unknown_modulus(self) -> None:
        """Only m in {3, 4, 6} is supported."""
        with pytest.raises(ConfigurationError):
            character_factor_exact(5, 2)
