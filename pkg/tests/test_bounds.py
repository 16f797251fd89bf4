"""
Tests for the |Lambda| ceilings in src/tailspan/bounds.py.
"""

import math

import numpy as np
import pytest


class TestRegimeCheck:
    """Test FR <= sqrt(N)/e."""

    def test_inflation_and_climate_operating_points(self):
        """Test the regime answers at the inflation, centered inflation and climate FR values."""
        from tailspan.bounds import regime_check

        assert (regime_check(1.4136, 526), regime_check(10.7853, 526), regime_check(12.6834, 1576)) \
            == (True, False, True)

    def test_edges(self):
        """Test the minimum FR and a value just above sqrt(526)/e."""
        from tailspan.bounds import regime_check

        assert regime_check(1.0, 1576)
        assert not regime_check(8.44, 526)
        assert math.sqrt(526) / math.e == pytest.approx(8.437, abs=1e-3)
        assert math.sqrt(1576) / math.e == pytest.approx(14.60, abs=1e-2)


class TestBoundFormulas:
    """Test the Bound/C arithmetic."""

    def test_simple_bound_value(self):
        """Test eta^-2 FR^2 ln(N/FR^2) at N=526, FR=1.4136, eta=1.04."""
        from tailspan.bounds import simple_bound_over_c

        assert simple_bound_over_c(1.4136, 526, 1.04) == pytest.approx(10.30, abs=0.02)

    def test_eta_scaling(self):
        """Test that bound * eta^2 is constant across the inflation grid."""
        from tailspan.bounds import general_bound_over_cprime, simple_bound_over_c

        scaled = [simple_bound_over_c(1.4136, 526, eta) * eta ** 2 for eta in (1.04, 1.05, 1.06, 1.07, 1.08)]
        general = [general_bound_over_cprime(1.4136, 526, eta) * eta ** 2 for eta in (1.04, 1.05, 1.06, 1.07, 1.08)]
        for values in (scaled, general):
            assert max(values) - min(values) <= 1e-12 * max(values)

    def test_monotone_in_eta(self):
        """Test that the bounds fall as eta grows."""
        from tailspan.bounds import bounds_from_fr

        reports = [bounds_from_fr(2.0, 1000, eta) for eta in (0.5, 1.0, 1.5, 2.0)]
        simple = [r.bound_simple_over_c for r in reports]
        assert simple == sorted(simple, reverse=True)

    @pytest.mark.parametrize("n", [64, 526, 1576])
    def test_monotone_in_fr(self, n):
        """Test that the simple bound grows with FR on [1, sqrt(N/e))."""
        from tailspan.bounds import simple_bound_over_c

        frs = np.linspace(1.0, math.sqrt(n / math.e), 200, endpoint=False)
        values = [simple_bound_over_c(float(fr), n, 1.1) for fr in frs]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_general_bound(self):
        """Test eta^-2 FR^2 ln N."""
        from tailspan.bounds import general_bound_over_cprime

        assert general_bound_over_cprime(2.0, 100, 2.0) == pytest.approx(math.log(100))

    def test_simple_bound_degenerate(self):
        """Test that FR^2 >= N has no simple bound."""
        from tailspan.bounds import simple_bound_over_c

        assert simple_bound_over_c(2.0, 4, 1.0) is None
        assert simple_bound_over_c(1.0, 1, 1.0) is None


class TestBoundsFromFR:
    """Test BoundReport assembly."""

    def test_strong_regime(self):
        """Test the strong regime reports the simple bound."""
        from tailspan.bounds import bounds_from_fr, within_bound

        report = bounds_from_fr(1.4136, 526, 1.04)
        assert report.strong_regime
        assert report.operative_bound == report.bound_simple_over_c
        assert report.notes == ()
        assert within_bound(7, report)
        assert not within_bound(11, report)

    def test_weak_regime(self):
        """Test the weak regime omits the simple bound and notes why."""
        from tailspan.bounds import bounds_from_fr

        report = bounds_from_fr(10.7853, 526, 1.5)
        assert not report.strong_regime
        assert report.bound_simple_over_c is None
        assert report.operative_bound == report.bound_general_over_cprime
        assert any("general bound" in note for note in report.notes)

    def test_single_point_is_weak(self):
        """Test that N=1 (FR=1 > 1/e) falls back to the general bound."""
        from tailspan.bounds import bounds_from_fr

        report = bounds_from_fr(1.0, 1, 1.0)
        assert not report.strong_regime
        assert report.bound_simple_over_c is None
        assert report.bound_general_over_cprime == 0.0

    def test_as_dict(self):
        """Test dictionary keys."""
        from tailspan.bounds import bounds_from_fr

        data = bounds_from_fr(1.5, 100, 1.0, spectral_lp=2.0, spectral_l2=1.0).as_dict()
        assert set(data) == {"n", "fr", "eta", "strong_regime", "bound_simple_over_c",
                             "bound_general_over_cprime", "bound_lognorm_over_c", "notes"}
        assert data["bound_lognorm_over_c"] == pytest.approx(4.0 * math.log(100))


class TestBoundReport:
    """Test bounds evaluated directly on signals."""

    def test_zero_signal_raises(self):
        """Test that the zero signal propagates the undefined-FR error."""
        from tailspan.bounds import bound_report
        from tailspan.errors import UndefinedFourierRatioError
        from tailspan.signal import Signal

        with pytest.raises(UndefinedFourierRatioError):
            bound_report(Signal(np.zeros(16)), 1.0)

    def test_character_report(self):
        """Test a pure character: FR = 1, strong regime."""
        from tailspan.bounds import bound_report
        from tailspan.signal import Signal

        x = np.arange(64)
        report = bound_report(Signal(np.exp(2j * np.pi * 3 * x / 64)), 1.0)
        assert report.fr == pytest.approx(1.0)
        assert report.strong_regime
        assert report.bound_simple_over_c == pytest.approx(math.log(64))

    def test_lognorm_delta_exact(self):
        """Test lognorm = e^-2 * general for a delta at N=1024."""
        from tailspan.bounds import bound_report
        from tailspan.signal import Signal

        values = np.zeros(1024)
        values[0] = 1
        report = bound_report(Signal(values), 1.2)

        # Flat spectrum: (||g||_p / ||g||_2)^2 = N^(2/p - 1) = N / e^2 when p = ln N / (ln N - 1)
        assert report.bound_lognorm_over_c == pytest.approx(
            math.exp(-2) * report.bound_general_over_cprime, rel=1e-9)

    def test_lognorm_noise_close(self):
        """Test lognorm against e^-2 * general within 10% on Gaussian noise, N=2048."""
        from tailspan.bounds import bound_report
        from synth import SynthSpec, generate

        f = generate(SynthSpec(kind="gaussian_noise", n=2048, seed=11))
        report = bound_report(f, 1.0)
        ratio = report.bound_lognorm_over_c / (math.exp(-2) * report.bound_general_over_cprime)

        assert abs(ratio - 1.0) <= 0.10

    def test_lognorm_undefined_small_n(self):
        """Test that N < 3 has no lognorm bound."""
        from tailspan.bounds import bound_report
        from tailspan.signal import Signal

        assert bound_report(Signal.from_values([1.0, 2.0]), 1.0).bound_lognorm_over_c is None


class TestIndicatorBound:
    """Test the ceiling for indicators of sets."""

    def test_density(self):
        """Test alpha = |A| / N."""
        from tailspan.bounds import indicator_density
        from tailspan.signal import Signal

        values = np.zeros(64)
        values[[1, 5, 9, 30]] = 1
        assert indicator_density(Signal(values)) == pytest.approx(4 / 64)

    def test_not_an_indicator(self):
        """Test that non-0/1 signals have no density."""
        from tailspan.bounds import indicator_density
        from tailspan.signal import Signal

        assert indicator_density(Signal.from_values([0, 2, 1])) is None
        assert indicator_density(Signal.from_values([0, 1j])) is None
        assert indicator_density(Signal(np.zeros(4))) is None

    def test_bound(self):
        """Test eta^-2 ln(1/alpha)."""
        from tailspan.bounds import indicator_bound_over_c

        assert indicator_bound_over_c(1 / 16, 2.0) == pytest.approx(math.log(16) / 4)
        assert indicator_bound_over_c(1.0, 1.0) == 0.0

    @pytest.mark.parametrize("alpha", [0.0, -0.1, 1.5])
    def test_bound_rejects_bad_density(self, alpha):
        """Test alpha outside (0, 1]."""
        from tailspan.bounds import indicator_bound_over_c

        with pytest.raises(ValueError):
            indicator_bound_over_c(alpha, 1.0)
