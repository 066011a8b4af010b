import numpy as np
import pytest

from momentum_walk import (
    FIRST_COIN,
    REFLECTION_COIN,
    STEP_COIN,
    UNREFLECTION_COIN,
    CoinParams,
    apply_coin,
    basis_state,
    biased_params,
    coin_matrix,
    conjugate_params,
)

from helpers import random_state


class TestCoinMatrix:
    def test_equal_superposition_pulse(self):
        # pi/2 pulse with chi=-pi/2 sends |1> to (|1> + i|2>)/sqrt(2)
        m = coin_matrix(CoinParams(np.pi / 2, -np.pi / 2))
        out = m @ np.array([1.0, 0.0])
        assert out == pytest.approx(np.array([1.0, 1.0j]) / np.sqrt(2))

    def test_identity_at_zero_angle(self):
        for chi in (0.0, 1.0, -np.pi):
            assert coin_matrix(CoinParams(0.0, chi)) == pytest.approx(np.eye(2))

    def test_biased_pulse(self):
        # rebalanced pulse: |1> -> sqrt(0.7)|1> + i sqrt(0.3)|2>
        params = biased_params(0.7)
        m = coin_matrix(params)
        out = m @ np.array([1.0, 0.0])
        assert out == pytest.approx(np.array([np.sqrt(0.7), 1j * np.sqrt(0.3)]))

    @pytest.mark.parametrize("alpha,chi", [
        (np.pi / 2, -np.pi / 2), (np.pi / 2, np.pi), (np.pi, np.pi / 2),
        (0.3, 1.7), (2.0, -0.4),
    ])
    def test_unitary_with_unit_determinant(self, alpha, chi):
        m = coin_matrix(CoinParams(alpha, chi))
        assert m @ m.conj().T == pytest.approx(np.eye(2), abs=1e-15)
        assert np.linalg.det(m) == pytest.approx(1.0, abs=1e-15)

    def test_reflection_pulses_swap_spins(self):
        refl = coin_matrix(REFLECTION_COIN)
        unrefl = coin_matrix(UNREFLECTION_COIN)
        swap = np.array([[0, 1], [1, 0]])
        assert refl == pytest.approx(1j * swap)
        assert unrefl == pytest.approx(-1j * swap)
        assert unrefl @ refl == pytest.approx(np.eye(2))

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            CoinParams(np.nan, 0.0)
        with pytest.raises(ValueError):
            CoinParams(0.0, np.inf)


class TestConjugateParams:
    def test_step_coin_convention(self):
        # the conjugate of the (pi/2, -pi/2) toss is the (pi/2, +pi/2) pulse
        conj = conjugate_params(STEP_COIN)
        assert conj.alpha == STEP_COIN.alpha
        expected = coin_matrix(STEP_COIN).conj().T
        assert coin_matrix(conj) == pytest.approx(expected)

    @pytest.mark.parametrize("params", [
        FIRST_COIN, STEP_COIN, REFLECTION_COIN,
        CoinParams(0.77, 0.31), CoinParams(2.9, -1.2),
    ])
    def test_conjugate_inverts(self, params):
        product = coin_matrix(conjugate_params(params)) @ coin_matrix(params)
        assert product == pytest.approx(np.eye(2), abs=1e-15)


class TestApplyCoin:
    def test_equal_superposition_over_lattice(self, small_lattice):
        state = basis_state(small_lattice, 0)
        out = apply_coin(state, STEP_COIN)
        i0 = small_lattice.index(0)
        assert out.amplitudes[i0] == pytest.approx(
            np.array([1.0, 1.0j]) / np.sqrt(2))
        assert abs(out.norm() - 1.0) < 1e-14

    def test_zero_angle_is_identity(self, small_lattice, rng):
        state = random_state(small_lattice, rng)
        out = apply_coin(state, CoinParams(0.0, 1.23))
        assert out.amplitudes == pytest.approx(state.amplitudes)

    def test_coin_then_conjugate_restores(self, small_lattice, rng):
        state = random_state(small_lattice, rng)
        for params in (FIRST_COIN, STEP_COIN, CoinParams(1.1, 0.4)):
            roundtrip = apply_coin(apply_coin(state, params),
                                   conjugate_params(params))
            assert np.max(np.abs(roundtrip.amplitudes - state.amplitudes)) < 1e-12

    def test_norm_preserved(self, small_lattice, rng):
        for _ in range(20):
            state = random_state(small_lattice, rng)
            params = CoinParams(rng.uniform(-6, 6), rng.uniform(-6, 6))
            assert abs(apply_coin(state, params).norm() - 1.0) < 1e-14

    def test_biased_weight_bounds(self):
        with pytest.raises(ValueError):
            biased_params(1.2)
        with pytest.raises(ValueError):
            biased_params(-0.1)
