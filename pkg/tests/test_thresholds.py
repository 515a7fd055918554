import math

import numpy as np
import pytest

import sidon as sd

# equalization point of the first three case bounds
A_STAR = (math.sqrt(13) - 3) / 2
B_STAR = 4 - math.sqrt(13)
G_STAR = math.sqrt((math.sqrt(13) + 1) / 6)

# point where the barely-separated closed form equals (2/3)^(1/4)
A_ALT = (1 + math.sqrt(6)) / 5
B_ALT = (2 * math.sqrt(6) - 3) / 5


class TestCaseBounds:
    def test_equalization_point(self):
        values = sd.case_bounds(A_STAR, B_STAR)
        for label in ("case_i", "case_ii", "case_iii_b"):
            assert values[label] == pytest.approx(G_STAR, abs=1e-9)
        assert values["case_iii_a"] == 1.0

    def test_quarter_power_point(self):
        values = sd.case_bounds(A_ALT, B_ALT)
        assert values["case_iii_c"] == pytest.approx((2 / 3) ** 0.25, abs=1e-9)

    def test_single_interval_limit(self):
        assert sd.case_bounds(1e-9, 0.0)["case_i"] == pytest.approx(1.0, abs=1e-6)

    def test_domain(self):
        with pytest.raises(sd.PreconditionError):
            sd.case_bounds(0.0, 0.5)
        with pytest.raises(sd.PreconditionError):
            sd.case_bounds(0.5, -0.1)


class TestGuaranteeAt:
    def test_at_equalization_point(self):
        point = sd.guarantee_at(A_STAR, B_STAR)
        assert point.guarantee == pytest.approx(G_STAR, abs=1e-3)
        assert set(point.active_cases) == {"case_i", "case_ii", "case_iii_b"}

    def test_wide_beta_leaves_two_cases(self):
        point = sd.guarantee_at(0.4, 2.0)
        expected = min(sd.case_bounds(0.4, 2.0)[c] for c in ("case_i", "case_ii"))
        assert point.guarantee == pytest.approx(expected, abs=1e-12)

    def test_never_exceeds_one(self):
        for a in (0.1, 0.3, 0.5, 0.9, 1.0):
            for b in (0.0, 0.3, 0.9, 1.4, 2.0):
                assert 0 < sd.guarantee_at(a, b).guarantee <= 1.0

    def test_region_minimum_against_grid_scan(self):
        # brute scan of the barely-separated region confirms the analytic
        # corner value at alpha = 1, beta = beta0
        for a0, b0 in ((0.3, 0.4), (0.5, 0.1), (0.7, 0.6), (0.9, 0.0)):
            values = sd.region_minima(a0, b0)
            if "case_iii_c" not in values:
                continue
            lo_alpha = max(a0, (1 + b0) / 2)
            brute = min(
                math.sqrt(2 * (1 + a + b) / (3 * (1 + a)))
                for a in np.linspace(lo_alpha, 1.0, 201)
                for b in np.linspace(b0, min(2 * a - 1, 1.0), 41)
                if b >= b0 and b <= 2 * a - 1
            )
            analytic = values["case_iii_c"]
            assert brute >= analytic - 1e-12
            assert brute <= analytic + 0.02

    def test_moderate_region_corner(self):
        # the moderate-separation form increases in both variables, so a
        # grid scan over its region never beats the corner value
        for a0, b0 in ((0.3, 0.4), (0.4, 0.2)):
            corner = sd.region_minima(a0, b0)["case_iii_b"]
            brute = min(
                math.sqrt((1 + 2 * a + b) / (2 * (1 + a)))
                for a in np.linspace(a0, 1.0, 101)
                for b in np.linspace(b0, 0.999, 101)
                if b > 2 * a - 1
            )
            assert brute >= corner - 1e-12


class TestSurface:
    def test_matches_scalar(self):
        alphas = np.array([0.1, 0.30278, 0.5, 0.77, 1.0])
        betas = np.array([0.0, 0.2, 0.3944, 0.9, 1.0, 1.7])
        surface = sd.guarantee_surface(alphas, betas)
        for i, a in enumerate(alphas):
            for j, b in enumerate(betas):
                assert surface[i, j] == pytest.approx(
                    sd.guarantee_at(float(a), float(b)).guarantee, abs=1e-12
                )

    def test_continuity_on_grid(self):
        alphas = sd.grid_values(0.01, 1.0, 0.01)
        betas = sd.grid_values(0.0, 2.0, 0.01)
        surface = sd.guarantee_surface(alphas, betas)
        assert np.all(np.abs(np.diff(surface, axis=0)) < 0.05)
        assert np.all(np.abs(np.diff(surface, axis=1)) < 0.05)

    def test_rejects_bad_grid(self):
        with pytest.raises(sd.PreconditionError):
            sd.guarantee_surface(np.array([0.0]), np.array([0.5]))


class TestOptimize:
    def test_reproduces_constant(self):
        point = sd.optimize_thresholds(0.001)
        assert point.guarantee == pytest.approx(G_STAR, abs=1e-3)
        assert abs(point.alpha0 - A_STAR) < 0.01
        assert abs(point.beta0 - B_STAR) < 0.01

    def test_coarse_grid_close_to_fine(self):
        coarse = sd.optimize_thresholds(0.01)
        fine = sd.optimize_thresholds(0.001)
        assert abs(coarse.guarantee - fine.guarantee) < 5e-3

    def test_restricted_line_is_weaker(self):
        restricted = sd.optimize_thresholds(0.005, beta_range=(0.0, 0.0))
        full = sd.optimize_thresholds(0.005)
        assert restricted.guarantee <= full.guarantee
        assert restricted.beta0 == 0.0

    def test_stays_in_sane_range(self):
        point = sd.optimize_thresholds(0.01)
        assert 1 / math.sqrt(2) <= point.guarantee <= 1.0

    def test_validation(self):
        with pytest.raises(sd.PreconditionError):
            sd.optimize_thresholds(0.5)
        with pytest.raises(sd.PreconditionError):
            sd.optimize_thresholds(0.01, beta_range=(1.0, 0.5))

    def test_grid_values_inclusive(self):
        grid = sd.grid_values(0.1, 0.5, 0.2)
        assert list(np.round(grid, 9)) == [0.1, 0.3, 0.5]
        assert len(sd.grid_values(0.0, 0.0, 0.01)) == 1
