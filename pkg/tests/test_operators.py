import numpy as np
import pytest

from momentum_walk import (
    KickParams,
    PhysicalKickInputs,
    SpinorState,
    TruncationError,
    apply_coin,
    apply_free_evolution,
    apply_kick,
    basis_state,
    bessel_j,
    ideal_shift,
    ideal_shift_dagger,
    initial_ratchet_state,
    kick_strength_from_physical,
    state_moments,
    symmetric_lattice,
    TALBOT_PERIOD,
)
from momentum_walk.coin import REFLECTION_COIN, UNREFLECTION_COIN

from helpers import random_state, state_l2_distance


def mean_momentum(state):
    return float(state_moments(state).mean[0])


class TestKickStrength:
    @pytest.mark.parametrize("omega,tau_p,delta,expected", [
        (1.0, 1.0, 2.0, 0.5),
        (1.0, 1.0, -2.0, -0.5),
        (2.0, 0.5, 1.0, 2.0),
    ])
    def test_formula(self, omega, tau_p, delta, expected):
        inputs = PhysicalKickInputs(omega, tau_p, delta)
        assert kick_strength_from_physical(inputs) == pytest.approx(expected)

    def test_zero_detuning_rejected(self):
        with pytest.raises(ValueError):
            PhysicalKickInputs(1.0, 1.0, 0.0)


class TestApplyKick:
    def test_zero_strength_is_identity(self, kick_lattice, rng):
        state = random_state(kick_lattice, rng, margin=30)
        out = apply_kick(state, KickParams(0.0, 0.0))
        assert np.array_equal(out.amplitudes, state.amplitudes)

    def test_single_site_populations_are_squared_bessel(self, kick_lattice):
        # diffraction of |n=0>: population at n is J_n(k)^2
        k = 1.45
        out = apply_kick(basis_state(kick_lattice, 0), KickParams(k, k))
        probs = out.probabilities()[:, 0]
        expected = np.array([bessel_j(int(n), k) ** 2
                             for n in kick_lattice.momenta()])
        assert np.linalg.norm(probs - expected) < 1e-8

    @pytest.mark.parametrize("k,phi", [
        (1.45, np.pi / 2), (1.45, -np.pi / 2), (1.45, 0.0),
        (1.7, np.pi / 4), (1.0, np.pi / 2),
    ])
    def test_ratchet_drift(self, kick_lattice, k, phi):
        # one resonant kick moves the mean by -k sin(phi) / 2
        state = initial_ratchet_state(kick_lattice, phi)
        kicked = apply_free_evolution(apply_kick(state, KickParams(k, k)),
                                      TALBOT_PERIOD)
        drift = mean_momentum(kicked) - mean_momentum(state)
        assert drift == pytest.approx(-k * np.sin(phi) / 2, abs=1e-10)

    def test_drift_sign_flips_with_phase(self, kick_lattice):
        state = initial_ratchet_state(kick_lattice, -np.pi / 2)
        kicked = apply_kick(state, KickParams(1.45, 1.45))
        assert mean_momentum(kicked) - 0.5 == pytest.approx(0.725, abs=1e-10)

    def test_norm_preserved_with_margin(self, kick_lattice, rng):
        state = random_state(kick_lattice, rng, margin=30)
        out = apply_kick(state, KickParams(-2.4, 3.0))
        assert abs(out.norm() - 1.0) < 1e-10

    def test_truncation_error_when_margin_missing(self):
        lattice = symmetric_lattice(4)
        state = basis_state(lattice, 0)
        with pytest.raises(TruncationError) as excinfo:
            apply_kick(state, KickParams(3.0, 3.0))
        assert excinfo.value.norm_loss > 1e-10

    def test_opposite_signs_move_spins_apart(self, kick_lattice):
        amps = np.zeros((kick_lattice.size, 2), complex)
        i0, i1 = kick_lattice.index(0), kick_lattice.index(1)
        amps[i0] = 0.5
        amps[i1] = 0.5j
        state = kick_lattice and __import__("momentum_walk").SpinorState(
            kick_lattice, amps)
        out = apply_free_evolution(apply_kick(state, KickParams(-1.45, 1.45)),
                                   TALBOT_PERIOD)
        probs = out.probabilities()
        n = kick_lattice.momenta()
        mean1 = (probs[:, 0] @ n) / probs[:, 0].sum()
        mean2 = (probs[:, 1] @ n) / probs[:, 1].sum()
        assert mean1 > 0.5 + 0.7
        assert mean2 < 0.5 - 0.7

    def test_invalid_params(self):
        with pytest.raises(ValueError):
            KickParams(np.inf, 0.0)
        with pytest.raises(ValueError):
            KickParams(1.0, 1.0, tau=0.0)


class TestFreeEvolution:
    def test_resonance_is_identity(self, kick_lattice, rng):
        state = random_state(kick_lattice, rng)
        out = apply_free_evolution(state, TALBOT_PERIOD)
        assert np.max(np.abs(out.amplitudes - state.amplitudes)) < 1e-12

    def test_zero_time_is_identity(self, kick_lattice, rng):
        state = random_state(kick_lattice, rng)
        out = apply_free_evolution(state, 0.0)
        assert np.array_equal(out.amplitudes, state.amplitudes)

    def test_quasimomentum_phase(self, small_lattice):
        state = basis_state(small_lattice, 1, beta=0.25)
        out = apply_free_evolution(state, TALBOT_PERIOD)
        expected = np.exp(-2j * np.pi * 1.25 ** 2)
        i1 = small_lattice.index(1)
        assert out.amplitudes[i1, 0] == pytest.approx(expected, abs=1e-14)

    def test_inverse(self, kick_lattice, rng):
        state = random_state(kick_lattice, rng, beta=0.37)
        roundtrip = apply_free_evolution(apply_free_evolution(state, 2.1), -2.1)
        assert np.max(np.abs(roundtrip.amplitudes - state.amplitudes)) < 1e-14


class TestIdealShift:
    def test_single_state(self, small_lattice):
        out = ideal_shift(basis_state(small_lattice, 0), 1)
        assert out.probabilities()[small_lattice.index(1), 0] == pytest.approx(1.0)

    def test_superposition_splits(self, small_lattice):
        amps = np.zeros((small_lattice.size, 2), complex)
        amps[small_lattice.index(0)] = 1 / np.sqrt(2)
        state = __import__("momentum_walk").SpinorState(small_lattice, amps)
        out = ideal_shift(state, 1)
        probs = out.probabilities()
        assert probs[small_lattice.index(1), 0] == pytest.approx(0.5)
        assert probs[small_lattice.index(-1), 1] == pytest.approx(0.5)

    def test_shift_then_dagger_is_identity(self, small_lattice, rng):
        for q in (1, 2):
            state = random_state(small_lattice, rng, margin=3)
            roundtrip = ideal_shift_dagger(ideal_shift(state, q), q)
            assert np.array_equal(roundtrip.amplitudes, state.amplitudes)

    def test_boundary_occupancy_raises(self, small_lattice):
        state = basis_state(small_lattice, small_lattice.n_max)
        with pytest.raises(TruncationError):
            ideal_shift(state, 1)
        state = basis_state(small_lattice, small_lattice.n_min, spin=2)
        with pytest.raises(TruncationError):
            ideal_shift(state, 1)

    def test_q_validation(self, small_lattice):
        state = basis_state(small_lattice, 0)
        with pytest.raises(ValueError):
            ideal_shift(state, 0)

    def test_conjugation_by_pi_pulses_inverts_shift(self, small_lattice, rng):
        # swap-shift-swap equals the inverse shift, for any q
        from momentum_walk import apply_coin
        for q in (1, 2):
            for _ in range(50):
                state = random_state(small_lattice, rng, margin=3)
                conjugated = apply_coin(
                    ideal_shift(apply_coin(state, REFLECTION_COIN), q),
                    UNREFLECTION_COIN)
                direct = ideal_shift_dagger(state, q)
                assert state_l2_distance(conjugated, direct) < 1e-12
