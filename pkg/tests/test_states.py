import numpy as np
import pytest

from momentum_walk import (
    MomentumLattice,
    SpinorState,
    basis_state,
    initial_ratchet_state,
    symmetric_lattice,
)


class TestMomentumLattice:
    def test_size_and_momenta(self):
        lat = MomentumLattice(-3, 4)
        assert lat.size == 8
        assert lat.momenta().tolist() == [-3, -2, -1, 0, 1, 2, 3, 4]

    def test_index_roundtrip(self):
        lat = MomentumLattice(-5, 7)
        for n in lat.momenta():
            assert lat.momenta()[lat.index(int(n))] == n

    def test_index_off_lattice(self):
        lat = symmetric_lattice(4)
        with pytest.raises(ValueError):
            lat.index(5)

    @pytest.mark.parametrize("n_min,n_max", [(1, 5), (-5, -1), (0, 1), (-1, 0)])
    def test_invalid_windows(self, n_min, n_max):
        with pytest.raises(ValueError):
            MomentumLattice(n_min, n_max)

    def test_zero_boundaries_allowed(self):
        assert MomentumLattice(0, 2).size == 3
        assert MomentumLattice(-2, 0).size == 3


class TestSpinorState:
    def test_requires_normalization(self, small_lattice):
        amps = np.zeros((small_lattice.size, 2), complex)
        amps[0, 0] = 2.0
        with pytest.raises(ValueError, match="not normalized"):
            SpinorState(small_lattice, amps)

    def test_requires_beta_range(self, small_lattice):
        amps = np.zeros((small_lattice.size, 2), complex)
        amps[0, 0] = 1.0
        with pytest.raises(ValueError, match="quasimomentum"):
            SpinorState(small_lattice, amps, beta=1.0)
        with pytest.raises(ValueError, match="quasimomentum"):
            SpinorState(small_lattice, amps, beta=-0.1)

    def test_shape_check(self, small_lattice):
        with pytest.raises(ValueError, match="shape"):
            SpinorState(small_lattice, np.zeros((3, 2), complex))

    def test_amplitudes_are_copied(self, small_lattice):
        amps = np.zeros((small_lattice.size, 2), complex)
        amps[0, 0] = 1.0
        state = SpinorState(small_lattice, amps)
        amps[0, 0] = 0.0
        assert state.norm() == pytest.approx(1.0)

    def test_basis_state(self, small_lattice):
        state = basis_state(small_lattice, 3, spin=2)
        probs = state.probabilities()
        assert probs[small_lattice.index(3), 1] == pytest.approx(1.0)
        assert probs.sum() == pytest.approx(1.0)


class TestInitialRatchetState:
    def test_standard_preparation(self, small_lattice):
        state = initial_ratchet_state(small_lattice, np.pi / 2)
        i0 = small_lattice.index(0)
        i1 = small_lattice.index(1)
        assert state.amplitudes[i0, 0] == pytest.approx(1 / np.sqrt(2))
        assert state.amplitudes[i1, 0] == pytest.approx(1j / np.sqrt(2))
        assert np.count_nonzero(state.amplitudes) == 2
        assert state.beta == 0.0

    def test_zero_phase(self, small_lattice):
        state = initial_ratchet_state(small_lattice, 0.0)
        i0, i1 = small_lattice.index(0), small_lattice.index(1)
        assert state.amplitudes[i1, 0] == pytest.approx(state.amplitudes[i0, 0])

    def test_spin_two(self, small_lattice):
        state = initial_ratchet_state(small_lattice, np.pi / 2, spin=2)
        assert np.all(state.amplitudes[:, 0] == 0)

    def test_lattice_too_small(self):
        with pytest.raises(ValueError, match="n=0 and n=1"):
            initial_ratchet_state(MomentumLattice(-2, 0), np.pi / 2)

    def test_norm(self, small_lattice):
        for phi in (0.0, np.pi / 4, -np.pi / 2, 2.2):
            state = initial_ratchet_state(small_lattice, phi)
            assert abs(state.norm() - 1.0) < 1e-12
