import math

import numpy as np
import pytest

from ladderlab import (
    EvolutionParams,
    build_evolution_operator,
    geometric_phase_check,
    max_entry,
    spectrum_via_dft,
)
from ladderlab.evolution import _cyclic_permutation


def dense_eigensolver_energies(params: EvolutionParams) -> np.ndarray:
    """Oracle: dense eigendecomposition of U, phases unwrapped to energies."""
    u = build_evolution_operator(params).entries
    lam = np.linalg.eigvals(u)
    args = np.angle(lam)
    args = np.where(args > 0, args - 2.0 * math.pi, args)
    n = np.rint((-args * params.n_states / math.pi - 1.0) / 2.0)
    return np.sort((n + 0.5) * params.omega)


class TestParams:
    def test_omega(self):
        p = EvolutionParams(7, 1.0)
        assert abs(p.omega * 7 * 1.0 - 2 * math.pi) < 1e-15

    @pytest.mark.parametrize("bad", [1, 0, -3])
    def test_rejects_small_n(self, bad):
        with pytest.raises(ValueError):
            EvolutionParams(bad, 1.0)

    def test_rejects_bad_tau(self):
        with pytest.raises(ValueError):
            EvolutionParams(4, 0.0)


class TestOperator:
    def test_two_state_explicit(self):
        u = build_evolution_operator(EvolutionParams(2, 1.0)).entries
        phase = np.exp(-1j * math.pi / 2)
        assert max_entry(u - phase * np.array([[0, 1], [1, 0]])) < 1e-15
        assert max_entry(u @ u + np.eye(2)) < 1e-15  # U^2 = -1

    def test_entry_convention(self):
        u = build_evolution_operator(EvolutionParams(5, 1.0)).entries
        phase = np.exp(-1j * math.pi / 5)
        for col in range(5):
            assert abs(u[(col + 1) % 5, col] - phase) < 1e-15
        assert np.count_nonzero(u) == 5

    def test_unitary_for_all_sizes(self):
        for n in range(2, 65):
            u = build_evolution_operator(EvolutionParams(n, 0.3)).entries
            assert max_entry(u @ u.conj().T - np.eye(n)) < 1e-13

    def test_seventh_power_is_minus_identity(self):
        u = build_evolution_operator(EvolutionParams(7, 1.0)).entries
        assert max_entry(np.linalg.matrix_power(u, 7) + np.eye(7)) < 1e-12


class TestSpectrum:
    def test_n7_matches_closed_form(self):
        spec = spectrum_via_dft(EvolutionParams(7, 1.0))
        expected = (np.arange(7) + 0.5) * 2 * math.pi / 7
        assert spec.hermitian
        assert np.allclose(spec.values, expected, atol=1e-10)

    def test_n2_tau_pi_oracle(self):
        p = EvolutionParams(2, math.pi)
        assert abs(p.omega - 1.0) < 1e-15
        spec = spectrum_via_dft(p)
        assert np.allclose(spec.values, [0.5, 1.5], atol=1e-12)
        assert np.allclose(spec.values, dense_eigensolver_energies(p), atol=1e-12)

    @pytest.mark.parametrize("n", range(2, 65))
    def test_matches_dense_eigensolver(self, n):
        p = EvolutionParams(n, 1.0)
        assert np.allclose(spectrum_via_dft(p).values, dense_eigensolver_energies(p), atol=1e-10)

    @pytest.mark.parametrize("n", [2, 5, 13, 40, 64])
    def test_equispaced_with_zero_point(self, n):
        p = EvolutionParams(n, 0.7)
        values = spectrum_via_dft(p).values
        assert abs(values[0] - p.omega / 2) < 1e-12
        assert np.allclose(np.diff(values), p.omega, atol=1e-12)

    def test_top_level_bounded(self):
        p = EvolutionParams(9, 1.0)
        values = spectrum_via_dft(p).values
        assert abs(values[-1] - (9 - 0.5) * p.omega) < 1e-12


class TestGeometricPhase:
    @pytest.mark.parametrize("n", [2, 3, 17, 64])
    def test_phase_is_minus_one(self, n):
        phi = geometric_phase_check(EvolutionParams(n, 1.0))
        assert abs(phi + 1.0) < 1e-12

    def test_bare_permutation_has_order_n(self):
        for n in (3, 8):
            perm = _cyclic_permutation(n)
            assert max_entry(np.linalg.matrix_power(perm, n) - np.eye(n)) == 0.0
