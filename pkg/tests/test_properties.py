"""Closed forms against hand values and quadrature of their defining integrals."""

import math

import numpy as np
import pytest

from wpdf import oracle
from wpdf import properties as pr
from wpdf.errors import DivergenceError, DomainError
from wpdf.family import PowerFamily, pdf

from helpers import BETA_GRID, GRID, K_GRID, mismatches

RTOL = 1e-8


def pfd(k, beta):
    return PowerFamily.pfd(k, beta)


def close(a, b, rtol=RTOL, atol=1e-13):
    return abs(a - b) <= max(rtol * abs(b), atol)


class TestMoments:
    def test_uniform_mean(self):
        assert pr.raw_moment(PowerFamily.wpdf(0.5, 1), 1) == 0.5

    def test_wpdf_moment(self):
        f = PowerFamily.wpdf(1, 2)
        assert pr.raw_moment(f, 1) == pytest.approx(4 / 3, rel=1e-15)
        assert pr.inverse_moment(f, 1) == pytest.approx(1.0, rel=1e-15)

    def test_inverse_moment_diverges(self):
        with pytest.raises(DivergenceError):
            pr.inverse_moment(pfd(2, 1), 2)

    def test_bad_order(self):
        with pytest.raises(DomainError):
            pr.raw_moment(pfd(2, 1), 0)

    def test_uniform_mean_variance(self):
        f = pfd(1, 1)
        assert pr.mean(f) == 0.5
        assert pr.variance(f) == pytest.approx(1 / 12, rel=1e-15)

    def test_wpdf_mean(self):
        assert pr.mean(PowerFamily.wpdf(2, 1)) == pytest.approx(0.8, rel=1e-15)

    @pytest.mark.parametrize("k", K_GRID)
    def test_cv_scale_free(self, k):
        vals = [pr.cv(pfd(k, b)) for b in BETA_GRID]
        assert max(vals) - min(vals) <= 1e-15

    @pytest.mark.parametrize("k, beta", GRID)
    def test_cv_from_moments(self, k, beta):
        f = pfd(k, beta)
        assert pr.cv(f) == pytest.approx(math.sqrt(pr.variance(f)) / pr.mean(f), rel=1e-12)

    def test_uncorrected_cv_disagrees_with_moments(self):
        f = PowerFamily.wpdf(2, 1)
        assert not math.isclose(pr.cv(f, uncorrected=True), math.sqrt(pr.variance(f)) / pr.mean(f), rel_tol=1e-3)

    @pytest.mark.parametrize("gamma", [0.3, 1.0, 2.0, 3.5])
    def test_mmlm_inversion_is_exact(self, gamma):
        # mean^2/var = k(k+2) inverts to gamma = (-1 + sqrt(1 + mean^2/var)) / 2
        f = PowerFamily.wpdf(gamma, 2.0)
        ratio = pr.mean(f) ** 2 / pr.variance(f)
        assert (-1 + math.sqrt(1 + ratio)) / 2 == pytest.approx(gamma, rel=1e-12)

    def test_incomplete_examples(self):
        assert pr.incomplete_moment(pfd(1, 1), 1, 0.5) == 0.125
        assert pr.incomplete_moment(PowerFamily.wpdf(1, 2), 1, 1) == pytest.approx(1 / 6, rel=1e-15)

    @pytest.mark.parametrize("k, beta", GRID)
    def test_incomplete_at_beta_is_raw(self, k, beta):
        f = pfd(k, beta)
        for r in (1, 2, 3):
            assert pr.incomplete_moment(f, r, beta) == pr.raw_moment(f, r)

    def test_incomplete_domain(self):
        with pytest.raises(DomainError):
            pr.incomplete_moment(pfd(1, 1), 1, 1.5)

    def test_conditional_examples(self):
        f = PowerFamily.wpdf(1, 1)
        assert pr.conditional_moment(f, 1, 0.5, uncorrected=True) == pytest.approx(0.875 * 2 / 3, rel=1e-15)
        assert pr.conditional_moment(f, 1, 0.5) == pytest.approx(0.875 * 2 / 3 / 0.75, rel=1e-15)
        assert pr.conditional_moment(pfd(1, 1), 1, 0.5) == pytest.approx(0.75, rel=1e-15)

    @pytest.mark.parametrize("k, beta", GRID)
    def test_conditional_at_zero_is_raw(self, k, beta):
        f = pfd(k, beta)
        assert pr.conditional_moment(f, 2, 0.0) == pr.raw_moment(f, 2)

    def test_uncorrected_conditional_moment_is_not_conditional(self):
        f = pfd(2, 3)
        q = oracle.conditional_moment(f, 1, 1.5)
        assert close(pr.conditional_moment(f, 1, 1.5), q)
        assert not close(pr.conditional_moment(f, 1, 1.5, uncorrected=True), q, rtol=1e-3)


class TestMgf:
    def test_zero(self):
        assert pr.mgf(pfd(3, 2), 0.0).value == 1.0

    def test_uniform(self):
        res = pr.mgf(pfd(1, 1), 1.0)
        assert res.converged
        assert res.value == pytest.approx(math.e - 1, rel=1e-13)

    @pytest.mark.parametrize("k, beta", GRID)
    def test_derivative_at_zero_is_mean(self, k, beta):
        f = pfd(k, beta)
        h = 1e-5
        d = (pr.mgf(f, h).value - pr.mgf(f, -h).value) / (2 * h)
        assert d == pytest.approx(pr.mean(f), abs=1e-6)

    def test_cap_reported(self):
        res = pr.mgf(pfd(2, 1), 30.0, pr.SeriesControl(max_terms=5))
        assert not res.converged and res.terms == 5

    def test_control_validation(self):
        with pytest.raises(DomainError):
            pr.SeriesControl(max_terms=0)
        with pytest.raises(DomainError):
            pr.SeriesControl(rel_tol=0)


class TestResidualLife:
    def test_uniform(self):
        f = pfd(1, 1)
        assert pr.mrf(f, 0.5) == pytest.approx(0.25, rel=1e-15)
        assert pr.vitality(f, 0.5) == pytest.approx(0.75, rel=1e-15)

    @pytest.mark.parametrize("k, beta", GRID)
    def test_at_zero(self, k, beta):
        f = pfd(k, beta)
        assert pr.mrf(f, 0.0) == pytest.approx(pr.mean(f), rel=1e-14)
        assert pr.vitality(f, 0.0) == pytest.approx(pr.mean(f), rel=1e-14)

    def test_vitality_quadrature(self):
        f = PowerFamily.wpdf(2, 1)
        assert abs(pr.vitality(f, 0.5) - oracle.vitality(f, 0.5)) <= 1e-9

    def test_uncorrected_vitality_fails_at_zero(self):
        f = pfd(2, 3)
        assert not math.isclose(pr.vitality(f, 0.0, uncorrected=True), pr.mean(f), rel_tol=1e-3)

    @pytest.mark.parametrize("k, beta", GRID)
    def test_vitality_is_x_plus_mrf(self, k, beta):
        f = pfd(k, beta)
        for x in np.linspace(0, beta, 52)[1:-1]:
            v = pr.vitality(f, x)
            assert abs(v - (x + pr.mrf(f, x))) <= 1e-12 * v

    def test_domain(self):
        with pytest.raises(DomainError):
            pr.mrf(pfd(1, 1), 1.0)


class TestEntropy:
    def test_uniform(self):
        f = pfd(1, 1)
        for s in (0.5, 2, 3):
            assert pr.renyi_entropy(f, s) == 0.0
        assert pr.shannon_entropy(f) == 0.0

    def test_renyi_hand_value(self):
        assert pr.renyi_entropy(pfd(2, 1), 2) == pytest.approx(-math.log(4 / 3), abs=1e-6)
        assert pr.renyi_entropy(pfd(2, 1), 2) == pytest.approx(-0.287682, abs=1e-6)

    @pytest.mark.parametrize("k", [0.5, 2, 4])
    def test_renyi_approaches_shannon(self, k):
        f = pfd(k, 1.7)
        h = pr.shannon_entropy(f)
        assert abs(pr.renyi_entropy(f, 1 - 1e-7) - h) <= 1e-6
        # first-order gap is (1 - s) Var(ln pdf(X)) / 2, and Var(ln pdf(X)) = ((k-1)/k)**2
        gap = pr.renyi_entropy(f, 0.999) - h
        assert gap == pytest.approx(0.0005 * ((k - 1) / k) ** 2, rel=2e-3)

    def test_s_equal_one(self):
        with pytest.raises(DomainError, match="shannon"):
            pr.renyi_entropy(pfd(2, 1), 1)

    def test_divergent(self):
        with pytest.raises(DivergenceError):
            pr.renyi_entropy(pfd(0.5, 1), 2)

    @pytest.mark.parametrize("k, beta", GRID)
    @pytest.mark.parametrize("s", [0.5, 1.5, 3.0])
    def test_information_consistent_with_renyi(self, k, beta, s):
        f = pfd(k, beta)
        if s * (k - 1) + 1 <= 0:
            pytest.skip("divergent order")
        info = pr.information_fn(f, s)
        assert abs(info - math.exp((1 - s) * pr.renyi_entropy(f, s))) <= 1e-12 * info


class TestOrderStatistics:
    def test_min_of_three_uniforms(self):
        assert pr.order_stat_pdf(pfd(1, 1), 1, 3, 0.5) == pytest.approx(0.75, rel=1e-14)

    @pytest.mark.parametrize("x", [0.1, 0.5, 0.9])
    def test_single_observation(self, x):
        f = pfd(2.5, 1)
        assert pr.order_stat_pdf(f, 1, 1, x) == pytest.approx(pdf(f, x), rel=1e-14)

    @pytest.mark.parametrize("x", [0.2, 0.6, 0.95])
    def test_maximum_form(self, x):
        from wpdf.family import cdf

        f = pfd(2, 1)
        assert pr.order_stat_pdf(f, 2, 2, x) == pytest.approx(2 * pdf(f, x) * cdf(f, x), rel=1e-14)

    @pytest.mark.parametrize("j, n", [(1, 4), (2, 4), (4, 4), (3, 7)])
    def test_matches_direct_product(self, j, n):
        f = pfd(1.7, 2.0)
        for x in (0.3, 1.0, 1.9):
            assert pr.order_stat_pdf(f, j, n, x) == pytest.approx(oracle.order_stat_pdf(f, j, n, x), rel=1e-12)

    def test_large_n_does_not_overflow(self):
        v = pr.order_stat_pdf(pfd(2, 1), 200, 400, 0.7071)
        assert math.isfinite(v) and v > 0

    def test_outside_support_and_index_errors(self):
        f = pfd(2, 1)
        assert pr.order_stat_pdf(f, 1, 3, 1.5) == 0.0
        with pytest.raises(DomainError):
            pr.order_stat_pdf(f, 0, 3, 0.5)
        with pytest.raises(DomainError):
            pr.order_stat_pdf(f, 4, 3, 0.5)


class TestLorenz:
    def test_uniform(self):
        f = pfd(1, 1)
        assert pr.lorenz(f, 0.5) == pytest.approx(0.25, rel=1e-15)
        assert pr.bonferroni(f, 0.5) == pytest.approx(0.5, rel=1e-15)

    @pytest.mark.parametrize("k, beta", GRID)
    def test_endpoints(self, k, beta):
        f = pfd(k, beta)
        assert pr.lorenz(f, 0.0) == 0.0
        assert abs(pr.lorenz(f, 1.0) - 1.0) <= 1e-12
        assert abs(pr.bonferroni(f, 1.0) - 1.0) <= 1e-12

    def test_quadrature_example(self):
        f = PowerFamily.wpdf(2, 3)
        assert abs(pr.lorenz(f, 0.5) - oracle.lorenz(f, 0.5)) <= 1e-9

    @pytest.mark.parametrize("k, beta", GRID)
    def test_convex_nondecreasing_below_diagonal(self, k, beta):
        f = pfd(k, beta)
        p = np.linspace(0, 1, 100)
        L = np.array([pr.lorenz(f, v) for v in p])
        assert np.all(np.diff(L) >= 0)
        assert np.all(np.diff(L, 2) >= -1e-12)
        B = np.array([pr.bonferroni(f, v) for v in p[1:]])
        assert np.all(B <= 1 + 1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            pr.bonferroni(pfd(1, 1), 0.0)
        with pytest.raises(DomainError):
            pr.lorenz(pfd(1, 1), 1.2)


class TestDoublyTruncatedMean:
    def test_uniform_midpoint(self):
        assert pr.dtm(pfd(1, 1), 0.2, 0.6) == pytest.approx(0.4, rel=1e-14)

    @pytest.mark.parametrize("k, beta", GRID)
    def test_full_support_is_mean(self, k, beta):
        f = pfd(k, beta)
        assert abs(pr.dtm(f, 0.0, beta) - pr.mean(f)) <= 1e-12 * pr.mean(f)

    def test_quadrature_example(self):
        f = PowerFamily.wpdf(2, 1)
        assert abs(pr.dtm(f, 0.3, 0.9) - oracle.dtm(f, 0.3, 0.9)) <= 1e-9

    def test_uncorrected_normalizer_is_off_by_beta(self):
        f = pfd(3, 2)
        assert pr.dtm(f, 0.5, 1.5, uncorrected=True) == pytest.approx(2 * pr.dtm(f, 0.5, 1.5), rel=1e-15)

    @pytest.mark.parametrize("k, beta", [(0.5, 1.0), (4.0, 3.0)])
    def test_monotone_and_bracketed(self, k, beta):
        f = pfd(k, beta)
        grid = np.linspace(0, beta, 12)
        table = np.full((12, 12), np.nan)
        for i, x in enumerate(grid):
            for j, y in enumerate(grid):
                if x < y:
                    table[i, j] = pr.dtm(f, x, y)
                    assert x < table[i, j] < y
        for i in range(12):
            row = table[i, i + 1 :]
            assert np.all(np.diff(row) > 0)
        for j in range(12):
            col = table[:j, j]
            assert np.all(np.diff(col) > 0)

    @pytest.mark.parametrize("k, beta", [(0.5, 1.0), (2.0, 3.0), (7.0, 0.5)])
    def test_characterization_on_grid(self, k, beta):
        # both the direct integral and the integration-by-parts form
        f = pfd(k, beta)
        pts = np.linspace(0, beta, 11)
        for x in pts[:-1]:
            for y in pts[pts > x]:
                closed = pr.dtm(f, x, y)
                assert close(closed, oracle.dtm(f, x, y))
                assert close(closed, oracle.dtm_from_cdf(f, x, y), rtol=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            pr.dtm(pfd(1, 1), 0.5, 0.5)


@pytest.mark.parametrize("k, beta", GRID)
def test_oracle_equivalence(k, beta):
    """Every closed form matches quadrature of its defining integral."""
    assert not mismatches(k, beta, rtol=RTOL)


@pytest.mark.parametrize("k, beta", GRID)
@pytest.mark.parametrize("j, n", [(1, 5), (3, 5), (5, 5)])
def test_order_stat_mass(k, beta, j, n):
    assert abs(oracle.order_stat_mass(pfd(k, beta), j, n) - 1.0) <= 1e-8
