"""Toeplitz/Hankel matrices, log-determinants, and the exact Barnes-G
closed forms for the determinant family."""

import math
import warnings

import numpy as np
import pytest

from whdet import (
    ConvergenceWarning,
    DomainError,
    LogDet,
    SingularMatrix,
    d_n,
    d_n_exact,
    det_tn_exact,
    fourier_coeff_u,
    fourier_coeff_v,
    fredholm_det_hankel_reg,
    hankel,
    hankel_section_inverse_det,
    ln_det_hankel_reg_exact,
    logdet,
    rel_exp_diff,
    toeplitz,
)


def cofactor_det(a):
    """Naive Laplace expansion, the independent oracle for logdet."""
    a = np.asarray(a)
    n = a.shape[0]
    if n == 1:
        return a[0, 0]
    total = 0.0
    for j in range(n):
        minor = np.delete(np.delete(a, 0, axis=0), j, axis=1)
        total += (-1) ** j * a[0, j] * cofactor_det(minor)
    return total


class TestMatrixBuilders:
    def test_toeplitz_identity(self):
        c = lambda k: 1.0 if k == 0 else 0.0
        assert np.array_equal(toeplitz(c, 3), np.eye(3))

    def test_toeplitz_v1(self):
        m = toeplitz(lambda k: fourier_coeff_v(1.0, k), 2)
        assert np.allclose(m, [[2, -1], [-1, 2]], atol=1e-14)

    def test_toeplitz_symmetric_for_even_symbol(self):
        m = toeplitz(lambda k: fourier_coeff_v(0.3, k), 4)
        assert np.max(np.abs(m - m.T)) < 1e-15

    def test_hankel_constant_zero(self):
        assert np.array_equal(hankel(lambda k: 1.0 if k == 0 else 0.0, 3),
                              np.zeros((3, 3)))

    def test_hankel_v1(self):
        m = hankel(lambda k: fourier_coeff_v(1.0, k), 2)
        assert np.allclose(m, [[-1, 0], [0, 0]], atol=1e-14)

    def test_hankel_index_symmetry(self):
        m = hankel(lambda k: fourier_coeff_v(0.35, k), 5)
        assert np.array_equal(m, m.T)


class TestLogDet:
    def test_identity(self):
        ld = logdet(np.eye(5))
        assert ld.ln_abs == 0.0 and ld.arg == 0.0

    def test_diag_complex(self):
        ld = logdet(np.diag([2.0, 1j]))
        assert abs(ld.ln_abs - math.log(2)) < 1e-15
        assert abs(math.remainder(ld.arg - math.pi / 2, 2 * math.pi)) < 1e-15

    def test_random_vs_cofactor(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            want = cofactor_det(a)
            got = logdet(a)
            assert abs(np.exp(got.log) / want - 1.0) < 1e-12

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            logdet(np.zeros((3, 3)))

    def test_logdet_addition(self):
        a = LogDet(1.0, 0.5)
        b = LogDet(-2.0, 0.25)
        assert (a + b).ln_abs == -1.0 and (a - b).arg == 0.25


BETA_GRID = [0.1, -0.1, 0.25, -0.25, 0.4, -0.4, 0.2 + 0.3j, -0.3 + 0.2j]


class TestDnRoutes:
    def test_n1_is_coefficient_sum(self):
        b = 0.3 + 0.1j
        for sign in (+1, -1):
            want = fourier_coeff_v(b, 0) + sign * fourier_coeff_v(b, 1)
            got = d_n(b, 1, sign)
            assert abs(np.exp(got.log) - want) < 1e-13

    def test_beta_zero(self):
        for sign in (+1, -1):
            ld = d_n(0.0, 6, sign)
            assert abs(ld.ln_abs) < 1e-12

    def test_matrix_vs_exact_spotcheck(self):
        got = d_n(0.25, 16, +1)
        want = d_n_exact(0.25, 16, +1)
        assert rel_exp_diff(got, want) < 1e-9

    @pytest.mark.parametrize("beta", BETA_GRID)
    def test_matrix_vs_exact_grid(self, beta):
        for n in (2, 7, 12):
            for sign in (+1, -1):
                assert rel_exp_diff(d_n(beta, n, sign), d_n_exact(beta, n, sign)) < 1e-9

    def test_real_beta_gives_real_determinant(self):
        for beta in (0.3, -0.35):
            for n in (3, 9):
                for sign in (+1, -1):
                    ld = d_n(beta, n, sign)
                    assert abs(math.remainder(ld.arg, math.pi)) < 1e-10

    def test_matrix_route_domain(self):
        with pytest.raises(DomainError):
            d_n(-0.6, 4, +1)

    def test_exact_route_beta_zero(self):
        for sign in (+1, -1):
            assert abs(d_n_exact(0.0, 5, sign).ln_abs) < 1e-12

    def test_exact_route_beyond_matrix_domain(self):
        # minus-sign closed form continues analytically past Re beta = -1/2
        ld = d_n_exact(-0.7, 4, -1)
        assert np.isfinite(ld.ln_abs) and np.isfinite(ld.arg)

    def test_continuation_scan(self):
        # matrix route matches the continued form on a grid approaching the
        # boundary, and the continued form stays continuous across it
        for b in (-0.3, -0.4, -0.45):
            assert rel_exp_diff(d_n(b, 4, -1), d_n_exact(b, 4, -1)) < 1e-9
        grid = np.linspace(-0.72, -0.3, 22)
        vals = np.array([np.exp(d_n_exact(b, 4, -1).log) for b in grid])
        steps = np.abs(np.diff(vals))
        assert np.all(steps < 0.1)  # no jumps along the continuation path

    def test_exact_route_excluded_points(self):
        with pytest.raises(DomainError):
            d_n_exact(-0.5, 3, +1)
        with pytest.raises(DomainError):
            d_n_exact(-1.5, 3, -1)


class TestDetTnExact:
    def test_n1_gamma_ratio(self):
        from scipy.special import loggamma
        b = 0.3 + 0.2j
        want = np.exp(loggamma(1 + 2 * b) - 2 * loggamma(1 + b))
        got = det_tn_exact(b, 1)
        assert abs(np.exp(got.log) - want) < 1e-13

    def test_beta_one_n2(self):
        got = det_tn_exact(1.0, 2)
        assert abs(np.exp(got.log) - 3.0) < 1e-12

    def test_vs_matrix(self):
        b = 0.3
        m = toeplitz(lambda k: fourier_coeff_v(b, k), 12)
        assert rel_exp_diff(logdet(m), det_tn_exact(b, 12)) < 1e-10

    @pytest.mark.parametrize("beta", [0.2, -0.35, 0.25 + 0.3j])
    def test_block_identity(self, beta):
        # det T_2n(v) = D_n^+ D_n^-
        for n in (2, 5, 9):
            t2n = logdet(toeplitz(lambda k: fourier_coeff_v(beta, k), 2 * n))
            assert rel_exp_diff(t2n, d_n(beta, n, +1) + d_n(beta, n, -1)) < 1e-9


class TestHankelSectionInverse:
    def test_beta_zero(self):
        res = hankel_section_inverse_det(0.0, 3, +1, N=64)
        assert abs(res.value.ln_abs) < 1e-12

    def test_plus_pairing(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConvergenceWarning)
            res = hankel_section_inverse_det(0.25, 4, +1)
        assert rel_exp_diff(res.value, d_n(0.25, 4, +1)) < 1e-3

    def test_minus_pairing(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConvergenceWarning)
            res = hankel_section_inverse_det(-0.25, 4, -1)
        assert rel_exp_diff(res.value, d_n(-0.25, 4, -1)) < 1e-3

    def test_refinement_monotone(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConvergenceWarning)
            r1 = hankel_section_inverse_det(0.25, 4, +1, N=128)
            r2 = hankel_section_inverse_det(0.25, 4, +1, N=256)
        assert r2.refinement < r1.refinement

    def test_domain_guards(self):
        with pytest.raises(DomainError):
            hankel_section_inverse_det(0.7, 4, -1)  # outside (-3/2, 1/2)
        with pytest.raises(DomainError):
            hankel_section_inverse_det(0.25, 4, +1, N=8)  # N < 4n

    def test_convergence_warning(self):
        with pytest.warns(ConvergenceWarning):
            hankel_section_inverse_det(0.25, 4, +1, N=128, tol=1e-12)


class TestHankelRegularized:
    def test_r_zero(self):
        ld = fredholm_det_hankel_reg(0.4, 0.0, +1)
        assert ld.ln_abs == 0.0 and ld.arg == 0.0

    @pytest.mark.parametrize("r", [0.5, 0.8])
    @pytest.mark.parametrize("sign", [+1, -1])
    def test_closed_form(self, r, sign):
        b = 0.3
        got = fredholm_det_hankel_reg(b, r, sign)
        want = ln_det_hankel_reg_exact(b, r, sign)
        assert abs(np.exp(got.log - want) - 1.0) < 1e-8

    def test_closed_form_value(self):
        # sign=+: ((1-r)/(1+r))^{b/2} (1-r^2)^{b^2/2} at b=0.3, r=0.8
        want = math.log((0.2 / 1.8) ** 0.15 * 0.36**0.045)
        got = fredholm_det_hankel_reg(0.3, 0.8, +1)
        assert abs(got.ln_abs - want) < 1e-8
