import numpy as np
import pytest

from momentum_walk import DomainError, bessel_j, bessel_j_sequence
from momentum_walk.bessel import bessel_j_orders

# Frozen from the quadrature oracle (tests/test_oracle.py checks the two
# routes against each other over a grid).
J1_AT_1_45 = 0.5504406911316962
J5_AT_1_45 = 0.0015283441795549


class TestBesselJ:
    def test_zero_argument(self):
        assert bessel_j(0, 0.0) == 1.0
        for m in (1, 2, 5, -3, 17):
            assert bessel_j(m, 0.0) == 0.0

    def test_frozen_quadrature_value(self):
        assert bessel_j(1, 1.45) == pytest.approx(J1_AT_1_45, abs=1e-12)

    def test_high_order_decay(self):
        # orders well beyond |x| are tiny: the kick band can be truncated
        assert abs(bessel_j(5, 1.45)) == pytest.approx(J5_AT_1_45, abs=1e-12)
        assert abs(bessel_j(25, 3.0)) < 1e-18

    @pytest.mark.parametrize("x", [0.5, 1.45, 3.0])
    def test_negative_order_symmetry(self, x):
        for m in range(-20, 21):
            expected = (-1.0) ** m * bessel_j(m, x)
            assert bessel_j(-m, x) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("x", [0.5, 1.45, 3.0, 12.0])
    def test_negative_argument_symmetry(self, x):
        for m in range(0, 12):
            expected = (-1.0) ** m * bessel_j(m, x)
            assert bessel_j(m, -x) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("k", [0.5, 1.0, 1.45, 1.7, 3.0, -3.0])
    def test_unitarity_sum_rule(self, k):
        # sum_m J_m(k)^2 = 1; |m| <= 40 reaches it at double precision
        total = sum(bessel_j(m, k) ** 2 for m in range(-40, 41))
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_domain_error_beyond_validated_argument(self):
        with pytest.raises(DomainError):
            bessel_j(0, 50.5)
        with pytest.raises(DomainError):
            bessel_j(2, -51.0)
        with pytest.raises(DomainError):
            bessel_j(0, np.nan)
        assert np.isfinite(bessel_j(3, 50.0))

    def test_tiny_argument(self):
        assert bessel_j(0, 1e-12) == pytest.approx(1.0, abs=1e-12)
        assert bessel_j(1, 1e-12) == pytest.approx(5e-13, abs=1e-15)

    def test_underflow_order_is_zero(self):
        assert bessel_j(2500, 50.0) == 0.0

    def test_rescaling_path(self):
        # long backward recurrences overflow without mid-run rescaling
        seq = bessel_j_sequence(400, 0.5)
        assert seq[0] == pytest.approx(bessel_j(0, 0.5), abs=1e-13)
        assert np.all(np.isfinite(seq))


class TestBesselOrders:
    def test_matches_scalar(self):
        orders = np.arange(-25, 26)
        values = bessel_j_orders(orders, 1.45)
        for m, v in zip(orders, values):
            assert v == pytest.approx(bessel_j(int(m), 1.45), abs=1e-14)

    def test_negative_argument(self):
        orders = np.arange(-10, 11)
        values = bessel_j_orders(orders, -1.7)
        for m, v in zip(orders, values):
            assert v == pytest.approx(bessel_j(int(m), -1.7), abs=1e-14)
