"""Admissibility guards for the singularity exponent."""

import pytest

from whdet import BetaContext, BetaParam, DomainError, check_beta


class TestStrips:
    def test_discrete_plus_ladder(self):
        check_beta(0.3, BetaContext.DISCRETE_PLUS)
        check_beta(-1.2, BetaContext.DISCRETE_PLUS)
        check_beta(-0.5 + 0.1j, BetaContext.DISCRETE_PLUS)  # off the real axis
        for bad in (-0.5, -1.5, -2.5):
            with pytest.raises(DomainError):
                check_beta(bad, BetaContext.DISCRETE_PLUS)

    def test_discrete_minus_ladder(self):
        check_beta(-0.5, BetaContext.DISCRETE_MINUS)  # allowed for the minus sign
        for bad in (-1.5, -3.5):
            with pytest.raises(DomainError):
                check_beta(bad, BetaContext.DISCRETE_MINUS)

    def test_continuous_strips(self):
        check_beta(1.2, BetaContext.CONTINUOUS_PLUS)
        with pytest.raises(DomainError):
            check_beta(1.5, BetaContext.CONTINUOUS_PLUS)
        check_beta(-0.9, BetaContext.CONTINUOUS_MINUS)
        with pytest.raises(DomainError):
            check_beta(0.5, BetaContext.CONTINUOUS_MINUS)

    def test_kernel_family(self):
        check_beta(0.99, BetaContext.KERNEL_FAMILY)
        with pytest.raises(DomainError):
            check_beta(1.0, BetaContext.KERNEL_FAMILY)

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            check_beta(float("nan"), BetaContext.KERNEL_FAMILY)


class TestBetaParam:
    def test_valid_construction(self):
        bp = BetaParam(0.3 + 0.1j, BetaContext.KERNEL_FAMILY)
        assert complex(bp) == 0.3 + 0.1j

    def test_invalid_construction(self):
        with pytest.raises(DomainError):
            BetaParam(-0.5, BetaContext.DISCRETE_PLUS)

    def test_accepted_by_operations(self):
        from whdet import d_n_exact
        bp = BetaParam(0.25, BetaContext.DISCRETE_PLUS)
        ld = d_n_exact(bp, 4, +1)
        assert abs(ld.ln_abs) < 1.0
