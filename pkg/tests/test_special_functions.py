import cmath
import math

import pytest

from paecs.errors import DomainError, OverflowDomainError
from paecs.special_functions import (
    hermite2,
    laguerre,
    laguerre_combo,
    laguerre_pm,
    laguerre_sum,
    overlap_kernel,
)


class TestLaguerre:
    def test_low_orders_match_hand_expansion(self):
        # L0 = 1, L1 = 1 - x, L2 = 1 - 2x + x^2/2, L3 = 1 - 3x + 3x^2/2 - x^3/6
        x = 0.7
        assert laguerre(0, x) == 1.0
        assert laguerre(1, x) == pytest.approx(0.3, abs=1e-15)
        assert laguerre(2, x) == pytest.approx(1 - 1.4 + 0.245, abs=1e-15)
        assert laguerre(3, -1.2) == pytest.approx(
            1 + 3.6 + 1.5 * 1.44 + 1.728 / 6, abs=1e-12
        )

    @pytest.mark.parametrize("m", [0, 1, 2, 5, 11, 20])
    @pytest.mark.parametrize("x", [-3.0, -0.4, 0.0, 0.9])
    def test_recurrence_agrees_with_explicit_sum(self, m, x):
        assert laguerre(m, x) == pytest.approx(laguerre_sum(m, x), rel=1e-12)

    @pytest.mark.parametrize("m", [0, 1, 2, 5])
    def test_recurrence_agrees_with_explicit_sum_large_x(self, m):
        # the alternating sum loses digits to cancellation for larger m*x,
        # so the large-x comparison stays at low orders
        assert laguerre(m, 4.0) == pytest.approx(laguerre_sum(m, 4.0), rel=1e-12)

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            laguerre(-1, 0.5)
        with pytest.raises(DomainError):
            laguerre(201, 0.5)
        with pytest.raises(DomainError):
            laguerre(2, float("nan"))


class TestLaguerrePm:
    @pytest.mark.parametrize("m", [0, 1, 3, 7])
    @pytest.mark.parametrize("x", [0.0, 0.3, 1.5, 4.0])
    @pytest.mark.parametrize("sign", [1, -1])
    def test_matches_direct_combination(self, m, x, sign):
        direct = math.exp(x) * laguerre(m, -x) + sign * math.exp(-x) * laguerre(m, x)
        assert laguerre_pm(m, x, sign) == pytest.approx(direct, rel=1e-12)

    @pytest.mark.parametrize("m", range(12))
    @pytest.mark.parametrize("x", [0.0, 0.1, 1.0, 3.3, 8.0])
    def test_minus_combination_is_nonnegative(self, m, x):
        assert laguerre_pm(m, x, -1) >= 0.0

    def test_accepts_string_signs(self):
        assert laguerre_pm(2, 0.7, "+") == laguerre_pm(2, 0.7, 1)
        assert laguerre_pm(2, 0.7, "-") == laguerre_pm(2, 0.7, -1)

    def test_overflow_is_reported(self):
        with pytest.raises(OverflowDomainError):
            laguerre_pm(0, 800.0, 1)


class TestLaguerreCombo:
    @pytest.mark.parametrize(
        "m,sm,n,sn", [(0, 1, 0, 1), (2, 1, 3, -1), (4, -1, 4, -1), (1, -1, 0, 1)]
    )
    @pytest.mark.parametrize("x", [0.2, 1.0, 2.7])
    def test_matches_pairwise_product(self, m, sm, n, sn, x):
        direct = (
            math.factorial(m)
            * math.factorial(n)
            * laguerre_pm(m, x, sm)
            * laguerre_pm(n, x, sn)
        )
        assert laguerre_combo(m, sm, n, sn, x) == pytest.approx(direct, rel=1e-12)

    def test_exact_zero_factor_gives_zero(self):
        # the minus combination vanishes at x = 0 for every order
        assert laguerre_pm(3, 0.0, -1) == 0.0
        assert laguerre_combo(3, -1, 2, 1, 0.0) == 0.0


class TestHermite2:
    def test_small_orders_match_hand_expansion(self):
        xi, eta = 0.8 + 0.3j, -0.5 + 1.1j
        assert hermite2(0, 0, xi, eta) == 1.0
        assert hermite2(1, 0, xi, eta) == pytest.approx(xi, rel=1e-14)
        assert hermite2(1, 1, xi, eta) == pytest.approx(xi * eta - 1, rel=1e-14)
        assert hermite2(2, 1, xi, eta) == pytest.approx(
            xi * xi * eta - 2 * xi, rel=1e-14
        )

    @pytest.mark.parametrize("m,n", [(0, 3), (2, 2), (3, 1), (5, 4)])
    def test_symmetric_under_order_exchange(self, m, n):
        xi, eta = 1.3 - 0.4j, 0.2 + 0.9j
        assert hermite2(m, n, xi, eta) == pytest.approx(
            hermite2(n, m, eta, xi), rel=1e-13
        )

    def test_rejects_orders_beyond_cap(self):
        with pytest.raises(DomainError):
            hermite2(41, 0, 1.0, 1.0)


class TestOverlapKernel:
    def test_zero_orders_reduce_to_coherent_overlap(self):
        alpha, beta = 0.9 + 0.2j, -0.4 + 0.7j
        direct = cmath.exp(
            -0.5 * abs(alpha) ** 2 - 0.5 * abs(beta) ** 2 + alpha.conjugate() * beta
        )
        assert overlap_kernel(0, 0, alpha, beta) == pytest.approx(direct, rel=1e-14)

    def test_single_creation_pulls_down_conjugate_amplitude(self):
        # <alpha| a-dagger |beta> = conj(alpha) <alpha|beta>
        alpha, beta = 0.6 - 0.3j, 1.1 + 0.5j
        base = overlap_kernel(0, 0, alpha, beta)
        assert overlap_kernel(1, 0, alpha, beta) == pytest.approx(
            alpha.conjugate() * base, rel=1e-13
        )

    def test_single_annihilation_pulls_down_amplitude(self):
        # <alpha| a |beta> = beta <alpha|beta>
        alpha, beta = 0.6 - 0.3j, 1.1 + 0.5j
        base = overlap_kernel(0, 0, alpha, beta)
        assert overlap_kernel(0, 1, alpha, beta) == pytest.approx(
            beta * base, rel=1e-13
        )

    @pytest.mark.parametrize("m,n", [(1, 1), (2, 0), (2, 3), (4, 4)])
    def test_matches_truncated_operator_sum(self, m, n):
        # <alpha| a^n adag^m |beta> summed over the number basis directly:
        # adag^m |k> = sqrt((k+m)!/k!) |k+m>, then a^n lowers by n
        alpha, beta = 0.8 + 0.1j, 0.5 - 0.6j
        total = 0.0j
        for k in range(60):
            j = k + m - n
            if j < 0:
                continue
            ket_coeff = (
                math.exp(-0.5 * abs(beta) ** 2)
                * beta**k
                / math.sqrt(math.factorial(k))
                * math.sqrt(math.factorial(k + m) / math.factorial(k))
            )
            lower = math.sqrt(math.factorial(k + m) / math.factorial(j))
            bra_coeff = (
                math.exp(-0.5 * abs(alpha) ** 2)
                * alpha.conjugate() ** j
                / math.sqrt(math.factorial(j))
            )
            total += bra_coeff * lower * ket_coeff
        assert overlap_kernel(m, n, alpha, beta) == pytest.approx(total, rel=1e-10)
