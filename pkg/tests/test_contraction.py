import math

import numpy as np
import pytest

from ladderlab import (
    ScalingPair,
    anticommutator,
    build_h1_rep,
    build_su2_rep,
    build_su11_rep,
    contraction_deviation,
    deformed_commutator_check,
    hamiltonian_identity_check,
    hermiticity_residual,
    holstein_primakoff,
    max_entry,
    position_momentum,
    run_contraction_study,
    scaled_ladders,
    su2_hamiltonian,
)


def basis_vector(dim, n):
    e = np.zeros(dim)
    e[n] = 1.0
    return e


class TestScaledLadders:
    def test_su2_vacuum_element_is_one(self):
        # <1|adag|0> = sqrt((2l - 0)/2l) * sqrt(1) = 1 for any l
        _, adag = scaled_ladders(build_su2_rep(2))
        assert abs(adag.entries[1, 0] - 1.0) < 1e-15

    def test_su11_fundamental_element(self):
        # k=1/2: <4|adag|3> = (3+1)/sqrt(2k) = 4
        _, adag = scaled_ladders(build_su11_rep(0.5, 8))
        assert abs(adag.entries[4, 3] - 4.0) < 1e-12

    def test_su2_elements_approach_canonical(self):
        osc = build_h1_rep(6)
        for l, tol in ((10, 0.3), (1000, 3e-3)):
            _, adag = scaled_ladders(build_su2_rep(l))
            gap = max_entry(adag.entries[:6, :6] - osc.Lplus.entries)
            assert gap < tol

    def test_heisenberg_rejected(self):
        with pytest.raises(ValueError):
            scaled_ladders(build_h1_rep(4))


class TestContractionDeviation:
    def test_su2_closed_form(self):
        # brute-force matrix evaluation agrees with n/l exactly
        rep = build_su2_rep(10)
        assert abs(contraction_deviation(rep, 2) - 0.2) < 1e-12

    def test_su11_closed_form(self):
        rep = build_su11_rep(20, 12)
        assert abs(contraction_deviation(rep, 4) - 0.2) < 1e-12

    def test_vacuum_deviation_vanishes(self):
        for rep in (build_su2_rep(3), build_su11_rep(1.5, 9)):
            assert contraction_deviation(rep, 0) < 1e-14

    @pytest.mark.parametrize("family", ["su2", "su11"])
    def test_matches_brute_force_vector_norm(self, family):
        rep = build_su2_rep(8) if family == "su2" else build_su11_rep(8, 12)
        a, adag = scaled_ladders(rep)
        comm = a.entries @ adag.entries - adag.entries @ a.entries
        for n in range(6):
            direct = np.linalg.norm(comm @ basis_vector(rep.dim, n) - basis_vector(rep.dim, n))
            assert abs(contraction_deviation(rep, n) - direct) < 1e-15

    def test_su2_top_state_allowed(self):
        # complete irrep: the closed form holds through n = dim - 1
        assert abs(contraction_deviation(build_su2_rep(5), 10) - 2.0) < 1e-12

    def test_su11_top_interior_enforced(self):
        rep = build_su11_rep(1, 8)
        contraction_deviation(rep, 6)
        with pytest.raises(ValueError):
            contraction_deviation(rep, 7)


class TestContractionStudy:
    def test_su2_sweep_frozen_values(self):
        report = run_contraction_study("su2", [5, 10, 20, 40], 4)
        assert np.allclose(report.deviations[:, 3], [0.6, 0.3, 0.15, 0.075], atol=1e-12)
        assert abs(report.fitted_slope + 1.0) < 1e-9
        assert report.fit_residual < 1e-9

    def test_su11_sweep_frozen_values(self):
        report = run_contraction_study("su11", [1, 2, 4, 8], 2)
        assert np.allclose(report.deviations[:, 1], [1.0, 0.5, 0.25, 0.125], atol=1e-12)
        assert abs(report.fitted_slope + 1.0) < 1e-9

    def test_table_complete(self):
        report = run_contraction_study("su11", [2, 4, 8], 5)
        assert report.deviations.shape == (3, 5)
        assert np.all(report.deviations >= 0)

    def test_slope_within_band_for_decade_sweeps(self):
        for family in ("su2", "su11"):
            report = run_contraction_study(family, [5, 10, 20, 40, 80], 4)
            assert -1.01 <= report.fitted_slope <= -0.99

    def test_fit_rejected_below_three_points(self):
        report = run_contraction_study("su2", [5, 10], 3)
        assert math.isnan(report.fitted_slope)
        assert math.isnan(report.fit_residual)

    def test_validation(self):
        with pytest.raises(ValueError):
            run_contraction_study("su2", [], 3)
        with pytest.raises(ValueError):
            run_contraction_study("su2", [10, 5], 3)
        with pytest.raises(ValueError):
            run_contraction_study("other", [1, 2], 3)
        with pytest.raises(ValueError):
            run_contraction_study("su2", [1, 2, 4], 1)

    def test_anticommutator_approaches_oscillator_ladder(self):
        # (1/2){adag, a}|n> -> (n + 1/2)|n> as the label grows
        gaps = []
        for l in (10, 100):
            rep = build_su2_rep(l)
            a, adag = scaled_ladders(rep)
            half = 0.5 * anticommutator(adag, a).entries
            n = 3
            gaps.append(abs(half[n, n].real - (n + 0.5)))
        assert gaps[1] < gaps[0] / 5
        # closed form of the gap is n^2/(2l)
        assert abs(gaps[0] - 9 / 20) < 1e-12


class TestHolsteinPrimakoff:
    def test_composition_example(self):
        # adag|3> = L+ f(L3)|3> = 4/sqrt(4) |4> = 2|4>
        rep = build_su11_rep(0.5, 8)
        _, adag = holstein_primakoff(rep)
        out = adag.entries @ basis_vector(8, 3)
        assert abs(out[4] - 2.0) < 1e-12
        assert np.linalg.norm(out) - 2.0 < 1e-12

    def test_vacuum_annihilated(self):
        a, _ = holstein_primakoff(build_su11_rep(0.5, 6))
        assert np.linalg.norm(a.entries @ basis_vector(6, 0)) == 0.0

    def test_entrywise_equals_oscillator_ladders(self):
        rep = build_su11_rep(0.5, 64)
        a, adag = holstein_primakoff(rep)
        osc = build_h1_rep(64)
        assert max_entry(a.entries - osc.Lminus.entries) < 1e-12
        assert max_entry(adag.entries - osc.Lplus.entries) < 1e-12

    def test_half_anticommutator_spectrum_on_interior(self):
        rep = build_su11_rep(0.5, 32)
        a, adag = holstein_primakoff(rep)
        half = 0.5 * anticommutator(adag, a).entries
        diag = np.diag(half).real
        assert np.allclose(diag[:31], np.arange(31) + 0.5, atol=1e-12)
        # matches the L3 eigenvalues n + 1/2 of the weight-1/2 series
        assert np.allclose(diag[:31], np.diag(rep.L3.entries).real[:31], atol=1e-12)

    def test_requires_fundamental_weight(self):
        with pytest.raises(ValueError):
            holstein_primakoff(build_su11_rep(1.0, 8))
        with pytest.raises(ValueError):
            holstein_primakoff(build_su2_rep(2))


class TestPositionMomentum:
    def test_hermitian(self):
        xhat, phat, _ = position_momentum(build_su2_rep(3), tau=0.7)
        assert hermiticity_residual(xhat) < 1e-15
        assert hermiticity_residual(phat) < 1e-15

    def test_spin_half_tau_pi_oracle(self):
        # alpha = 1, beta = -1: x = sigma1/2, p = -sigma2/2, with the Pauli
        # matrices written in the |n> ordering (n=0 is m=-1/2)
        xhat, phat, pair = position_momentum(build_su2_rep(0.5), tau=math.pi)
        assert abs(pair.alpha - 1.0) < 1e-15
        assert abs(pair.beta + 1.0) < 1e-15
        sigma1 = np.array([[0, 1], [1, 0]], dtype=complex)
        sigma2_flipped = np.array([[0, 1j], [-1j, 0]])
        assert max_entry(xhat.entries - sigma1 / 2) < 1e-15
        assert max_entry(phat.entries + sigma2_flipped / 2) < 1e-15

    def test_scaling_pair_product_invariant(self):
        for tau in (0.01, 0.1, 1.0, math.pi):
            for l in (0.5, 3, 22.5):
                pair = ScalingPair.for_parameters(tau, l)
                assert abs(pair.alpha * pair.beta * (2 * l + 1) / (-2) - 1.0) < 1e-14

    def test_scaling_pair_validation(self):
        with pytest.raises(ValueError):
            ScalingPair.for_parameters(-1.0, 3)
        with pytest.raises(ValueError):
            ScalingPair(alpha=1.0, beta=1.0, tau=1.0, l=0.5)

    def test_requires_su2(self):
        with pytest.raises(ValueError):
            position_momentum(build_su11_rep(1, 8), tau=1.0)


class TestOperatorIdentities:
    def test_deformed_commutator_exact_l3(self):
        assert deformed_commutator_check(build_su2_rep(3), tau=1.0) < 1e-12

    def test_deformed_commutator_spin_half_explicit(self):
        # 2x2 oracle: [x, p] at l=1/2, tau=pi from hand-built matrices
        rep = build_su2_rep(0.5)
        tau = math.pi
        xhat, phat, _ = position_momentum(rep, tau)
        lhs = xhat.entries @ phat.entries - phat.entries @ xhat.entries
        h = su2_hamiltonian(rep, tau).entries
        rhs = 1j * (np.eye(2) - (tau / math.pi) * h)
        assert max_entry(lhs - rhs) < 1e-15
        # and the same matrices by hand: [sigma1/2, -sigma2/2] = -i sigma3/2
        sigma3 = np.diag([-1.0, 1.0])
        assert max_entry(lhs + 1j * sigma3 / 2) < 1e-15

    def test_deformation_visible_at_top_state(self):
        # eigenvalue of [x, p]/i is 1 - (2n+1)/N, negative at the top for l >= 1
        rep = build_su2_rep(6)
        xhat, phat, _ = position_momentum(rep, tau=0.5)
        comm = (xhat.entries @ phat.entries - phat.entries @ xhat.entries) / 1j
        diag = np.diag(comm).real
        n = np.arange(rep.dim)
        assert np.allclose(diag, 1.0 - (2.0 * n + 1.0) / rep.dim, atol=1e-13)
        assert diag[-1] < 0

    def test_hamiltonian_identity_exact_l3(self):
        assert hamiltonian_identity_check(build_su2_rep(3), tau=1.0) < 1e-12

    def test_hamiltonian_identity_large_l_small_tau(self):
        assert hamiltonian_identity_check(build_su2_rep(25), tau=0.01) < 1e-10

    @pytest.mark.parametrize("tau", [0.01, 0.1, 1.0, math.pi])
    def test_both_identities_across_tau(self, tau):
        for l in (0.5, 4, 12.5, 25, 50):
            rep = build_su2_rep(l)
            assert deformed_commutator_check(rep, tau) < 1e-10
            assert hamiltonian_identity_check(rep, tau) < 1e-10

    def test_correction_term_vanishes_in_contraction(self):
        # (tau/2pi)(omega^2/4 + H^2) on a fixed state, omega fixed at 1
        def correction_norm(l, n):
            big_n = int(2 * l + 1)
            tau = 2 * math.pi / big_n  # omega = 2 pi/(N tau) = 1
            rep = build_su2_rep(l)
            h = su2_hamiltonian(rep, tau).entries
            corr = (tau / (2 * math.pi)) * (1.0 / 4.0 * np.eye(big_n) + h @ h)
            e = basis_vector(big_n, n)
            return np.linalg.norm(corr @ e)

        values = [correction_norm(l, n=2) for l in (5, 50, 500)]
        assert values[0] > values[1] > values[2]
        assert values[2] < 1e-2

    def test_energy_ordering_unchanged_by_scaling(self):
        # scaling touches only the off-diagonal ladders; H is untouched
        rep = build_su2_rep(4)
        h = su2_hamiltonian(rep, tau=0.3)
        before = np.sort(np.linalg.eigvalsh(h.entries))
        scaled_ladders(rep)
        after = np.sort(np.linalg.eigvalsh(su2_hamiltonian(rep, tau=0.3).entries))
        assert np.array_equal(before, after)
        assert np.all(np.diff(before) > 0)
