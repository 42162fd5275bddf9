"""Special-function layer against independent series/quadrature oracles."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylspin import DomainError, PoleProximityError, specfun

import oracles

# generic arguments staying clear of low-order Bessel zeros
SPOT_ARGS = (0.37, 1.234, 2.9, 4.71, 7.3, 11.25, 19.4, 33.0, 47.5)


class TestBesselJ:
    def test_small_argument_limits(self):
        assert specfun.bessel_j(0, 1e-9) == pytest.approx(1.0, abs=1e-12)
        assert specfun.bessel_j(1, 1e-9) == pytest.approx(0.0, abs=1e-9)
        assert specfun.bessel_j(3, 1e-6) == pytest.approx(0.0, abs=1e-12)

    def test_vanishes_at_first_zero_of_series_oracle(self):
        zero = oracles.j0_first_zero()
        assert zero == pytest.approx(2.404825557695773, abs=1e-12)
        assert abs(specfun.bessel_j(0, zero)) < 1e-10

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
    @pytest.mark.parametrize("x", SPOT_ARGS)
    def test_matches_series_oracle(self, n, x):
        expected = oracles.j_series(n, x)
        assert specfun.bessel_j(n, x) == pytest.approx(expected, rel=1e-12, abs=1e-280)

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
    def test_domain_errors(self, bad):
        with pytest.raises(DomainError):
            specfun.bessel_j(0, bad)

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            specfun.bessel_j(-1, 1.0)

    def test_pure(self):
        assert specfun.bessel_j(4, 17.3) == specfun.bessel_j(4, 17.3)


class TestBesselK:
    @pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
    @pytest.mark.parametrize("x", (0.2, 1.0, 3.7, 9.0, 25.0))
    def test_positive(self, n, x):
        assert specfun.bessel_k(n, x) > 0.0

    def test_matches_quadrature_oracle_at_unit_argument(self):
        assert specfun.bessel_k(0, 1.0) == pytest.approx(oracles.k_integral(0, 1.0), rel=1e-10)

    def test_recurrence_from_oracle_low_orders(self):
        # K2(5) = K0(5) + (2*1/5) K1(5), the two low orders from quadrature
        k0 = oracles.k_integral(0, 5.0)
        k1 = oracles.k_integral(1, 5.0)
        assert specfun.bessel_k(2, 5.0) == pytest.approx(k0 + 0.4 * k1, rel=1e-10)

    @pytest.mark.parametrize("x", [0.0, -2.0, math.nan])
    def test_domain_errors(self, x):
        with pytest.raises(DomainError):
            specfun.bessel_k(1, x)


class TestRatios:
    def test_jratio_small_argument_series(self):
        # J1/J0 = x/2 + O(x^3)
        for x in (1e-4, 1e-3, 1e-2):
            assert specfun.jratio(0, x) == pytest.approx(x / 2.0, abs=x ** 3)

    def test_jratio_pole_error_near_zero_of_j0(self):
        # truncating the oracle zero to five decimals is still "at" the pole
        with pytest.raises(PoleProximityError):
            specfun.jratio(0, 2.40483)
        # but a point 1e-4 away is usable
        assert math.isfinite(specfun.jratio(0, 2.4050))

    def test_jratio_matches_direct_quotient(self):
        for n in (0, 1, 3):
            for x in SPOT_ARGS:
                direct = specfun.bessel_j(n + 1, x) / specfun.bessel_j(n, x)
                assert specfun.jratio(n, x) == pytest.approx(direct, rel=1e-14)

    @settings(max_examples=200, deadline=None)
    @given(n=st.integers(min_value=0, max_value=10),
           x=st.floats(min_value=1e-3, max_value=60.0))
    def test_kratio_exceeds_one(self, n, x):
        assert specfun.kratio(n, x) > 1.0

    def test_kratio_matches_direct_quotient(self):
        for n in (0, 2, 6):
            for x in (0.3, 2.2, 8.0, 30.0):
                direct = specfun.bessel_k(n + 1, x) / specfun.bessel_k(n, x)
                assert specfun.kratio(n, x) == pytest.approx(direct, rel=1e-13)


class TestIdentities:
    @settings(max_examples=300, deadline=None)
    @given(n=st.integers(min_value=1, max_value=8),
           x=st.floats(min_value=0.05, max_value=45.0))
    def test_j_recurrence(self, n, x):
        jm = specfun.bessel_j(n - 1, x)
        j0 = specfun.bessel_j(n, x)
        jp = specfun.bessel_j(n + 1, x)
        scale = max(abs(jm), abs(jp))
        assert abs(jm + jp - (2.0 * n / x) * j0) <= 1e-10 * scale

    @settings(max_examples=300, deadline=None)
    @given(n=st.integers(min_value=1, max_value=8),
           x=st.floats(min_value=0.05, max_value=45.0))
    def test_k_recurrence(self, n, x):
        km = specfun.bessel_k(n - 1, x)
        k0 = specfun.bessel_k(n, x)
        kp = specfun.bessel_k(n + 1, x)
        assert abs(kp - (km + (2.0 * n / x) * k0)) <= 1e-10 * max(km, kp)

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 8])
    @pytest.mark.parametrize("x", SPOT_ARGS)
    def test_j_derivative_identity(self, n, x):
        # independent three-term form J'_n = (J_{n-1} - J_{n+1})/2
        jm = specfun.bessel_j_int(n - 1, x)
        jp = specfun.bessel_j(n + 1, x)
        expected = 0.5 * (jm - jp)
        scale = max(abs(jm), abs(jp), abs(expected))
        assert abs(specfun.bessel_j_deriv(n, x) - expected) <= 1e-10 * scale

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 8])
    @pytest.mark.parametrize("x", (0.3, 1.1, 4.0, 12.0))
    def test_k_derivative_identity(self, n, x):
        km = specfun.bessel_k_int(n - 1, x)
        kp = specfun.bessel_k(n + 1, x)
        expected = -0.5 * (km + kp)
        assert specfun.bessel_k_deriv(n, x) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("n,x", [(1, 3.3), (4, 7.9), (0, 0.9)])
    def test_derivatives_against_finite_difference(self, n, x):
        h = 1e-6
        fd_j = (specfun.bessel_j(n, x + h) - specfun.bessel_j(n, x - h)) / (2 * h)
        assert specfun.bessel_j_deriv(n, x) == pytest.approx(fd_j, abs=1e-9, rel=1e-7)
        fd_k = (specfun.bessel_k(n, x + h) - specfun.bessel_k(n, x - h)) / (2 * h)
        assert specfun.bessel_k_deriv(n, x) == pytest.approx(fd_k, abs=1e-9, rel=1e-7)

    @settings(max_examples=100, deadline=None)
    @given(n=st.integers(min_value=0, max_value=9),
           x=st.floats(min_value=0.1, max_value=30.0))
    def test_j_reflection_exact(self, n, x):
        expected = specfun.bessel_j(n, x) * (-1.0) ** n
        assert specfun.bessel_j_int(-n, x) == expected

    def test_k_reflection_even(self):
        assert specfun.bessel_k_int(-3, 2.5) == specfun.bessel_k(3, 2.5)


class TestZeros:
    def test_zeros_below_bound(self):
        zs = specfun.bessel_j_zeros(0, 10.0)
        assert len(zs) == 3
        assert zs[0] == pytest.approx(oracles.j0_first_zero(), abs=1e-12)
        for z in zs:
            assert abs(specfun.bessel_j(0, z)) < 1e-10
