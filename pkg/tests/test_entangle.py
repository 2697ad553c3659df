import math

import numpy as np
import pytest

from circent.entangle import (
    asymptotic_binomial_entropy,
    asymptotic_weight_entropy,
    bounds_check,
    entanglement_general,
    entanglement_rics,
    fock_oracle,
    fock_oracle_for,
    max_rics_entanglement,
    partial_density_kerr,
    partial_density_rics_basis,
    schmidt_rics,
    thresholds,
)
from circent.spectral import binomial_dist, g_tilde, shannon_entropy
from circent.states import (
    SQRT2,
    CircularState,
    RICSLabel,
    StateSpec,
    coherent_fock_amps,
    custom_state,
    in_state,
)


class TestSchmidtRICS:
    def test_single_component_product_state(self):
        dec = schmidt_rics(RICSLabel(0, 1, 1.0))
        np.testing.assert_allclose(dec.lambdas, [1.0])
        assert entanglement_rics(RICSLabel(0, 1, 1.0)).e_bits == 0.0

    @pytest.mark.parametrize("alpha0", [0.1, 0.5, 1.0, 2.0, 4.0])
    def test_odd_cat_always_one_ebit(self, alpha0):
        dec = schmidt_rics(RICSLabel(1, 2, alpha0))
        np.testing.assert_allclose(dec.lambdas, [0.5, 0.5], atol=1e-13)
        assert abs(entanglement_rics(RICSLabel(1, 2, alpha0)).e_bits - 1.0) < 1e-12

    def test_matches_fock_oracle(self):
        spec = StateSpec("rics", 4, 3.0, q=0)
        analytic = sorted(schmidt_rics(RICSLabel(0, 4, 3.0)).lambdas, reverse=True)
        oracle = fock_oracle_for(spec).lambdas[:4]
        assert np.max(np.abs(np.array(analytic) - oracle)) < 1e-8

    def test_normalization_and_pairing(self):
        for q in range(6):
            dec = schmidt_rics(RICSLabel(q, 6, 2.0))
            assert abs(dec.lambdas.sum() - 1.0) < 1e-10
            assert sorted(k for k, _ in dec.pairing) == list(range(6))
            assert sorted(k for _, k in dec.pairing) == list(range(6))
            assert all(kb == (q - ka) % 6 for ka, kb in dec.pairing)

    def test_zero_radius_rejected(self):
        with pytest.raises(ValueError):
            schmidt_rics(RICSLabel(0, 3, 0.0))


class TestEntanglementRICS:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_large_amplitude_asymptote(self, n):
        e = entanglement_rics(RICSLabel(1, n, 4.0)).e_bits
        assert abs(e - math.log2(n)) < 0.02

    def test_small_amplitude_vacuum(self):
        assert entanglement_rics(RICSLabel(0, 3, 1e-3)).e_bits < 1e-4

    def test_plateau_equals_binomial_entropy(self):
        e = entanglement_rics(RICSLabel(4, 80, 3.0)).e_bits
        assert abs(e - shannon_entropy(binomial_dist(4))) < 0.02

    def test_rank_bound(self):
        for n in (2, 5, 9):
            for q in range(n):
                e = entanglement_rics(RICSLabel(q, n, 2.5)).e_bits
                assert e <= math.log2(n) + 1e-9


class TestPartialDensityRICSBasis:
    def test_single_component(self):
        rho = partial_density_rics_basis(CircularState(1, 1.0, np.array([1.0])))
        np.testing.assert_allclose(rho, [[1.0]])

    def test_rics_input_gives_diagonal(self):
        spec = StateSpec("rics", 5, 1.4, q=2)
        src = in_state(spec)
        rho = partial_density_rics_basis(CircularState(5, 1.4, src.coeffs))
        off = rho - np.diag(np.diag(rho))
        assert np.max(np.abs(off)) < 1e-12
        expected = schmidt_rics(RICSLabel(2, 5, 1.4)).lambdas
        np.testing.assert_allclose(np.real(np.diag(rho)), expected, atol=1e-12)

    def test_random_state_matches_oracle(self):
        rng = np.random.default_rng(19)
        c = rng.normal(size=5) + 1j * rng.normal(size=5)
        spec = StateSpec("custom", 5, 1.5, coeffs=c)
        e_eig = entanglement_general(spec).e_bits
        e_oracle = fock_oracle_for(spec).e_bits
        assert abs(e_eig - e_oracle) < 1e-8

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError):
            partial_density_rics_basis(CircularState(3, 1.0, np.array([2.0, 0, 0])))

    def test_trace_one_and_hermitian(self):
        rng = np.random.default_rng(23)
        c = rng.normal(size=4) + 1j * rng.normal(size=4)
        src = custom_state(4, SQRT2 * 1.2, c)
        rho = partial_density_rics_basis(CircularState(4, 1.2, src.coeffs))
        assert abs(np.trace(rho).real - 1.0) < 1e-9
        assert np.max(np.abs(rho - rho.conj().T)) < 1e-12


class TestPartialDensityKerr:
    def test_single_component(self):
        rho = partial_density_kerr(1, 2.0)
        np.testing.assert_allclose(rho, [[1.0]])
        assert entanglement_general(StateSpec("kerr", 1, 2.0)).e_bits == 0.0

    def test_two_component_large_amplitude(self):
        e = entanglement_general(StateSpec("kerr", 2, 4.0)).e_bits
        assert abs(e - 1.0) < 1e-6

    def test_matches_fock_oracle(self):
        spec = StateSpec("kerr", 10, 2.0)
        assert abs(entanglement_general(spec).e_bits
                   - fock_oracle_for(spec).e_bits) < 1e-8

    def test_sweep_maximum_near_log_pi_alpha(self):
        best = max(entanglement_general(StateSpec("kerr", n, 4.0)).e_bits
                   for n in range(1, 61))
        assert abs(best - math.log2(math.pi * 4.0)) < 0.3


class TestEntanglementGeneral:
    def test_rics_equals_analytic(self):
        for q, n, a in [(0, 4, 1.0), (2, 5, 2.0), (1, 3, 0.4)]:
            spec = StateSpec("rics", n, a, q=q)
            assert abs(entanglement_general(spec).e_bits
                       - entanglement_rics(RICSLabel(q, n, a)).e_bits) < 1e-10

    def test_single_component_zero(self):
        assert entanglement_general(StateSpec("rics", 1, 1.0, q=0)).e_bits == 0.0


class TestFockOracle:
    def test_single_photon_one_ebit(self):
        amps = np.zeros(8)
        amps[1] = 1.0
        assert abs(fock_oracle(amps).e_bits - 1.0) < 1e-12

    def test_coherent_state_product(self):
        amps = coherent_fock_amps(1.3, 50)
        assert fock_oracle(amps).e_bits < 1e-8

    def test_four_photon_binomial(self):
        amps = np.zeros(12)
        amps[4] = 1.0
        expected = shannon_entropy(binomial_dist(4))
        assert abs(fock_oracle(amps).e_bits - expected) < 1e-12

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError):
            fock_oracle(np.array([1.0, 1.0]))

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 10])
    def test_method_agreement(self, n):
        for q in range(0, n, max(1, n // 3)):
            for a in (0.7, 2.5):
                spec = StateSpec("rics", n, a, q=q)
                e_a = entanglement_rics(RICSLabel(q, n, a)).e_bits
                assert abs(e_a - fock_oracle_for(spec).e_bits) < 1e-7
                assert abs(e_a - entanglement_general(spec).e_bits) < 1e-10


class TestAsymptotics:
    def test_binomial_term_vanishes_for_huge_n(self):
        assert asymptotic_binomial_entropy(400, 1.0) < 1e-10

    def test_weight_entropy_limits(self):
        assert asymptotic_weight_entropy(400, 1.0) < 1e-10
        assert asymptotic_weight_entropy(1, 0.0) == 0.0

    def test_weight_entropy_peaks_at_unit_ratio(self):
        # X(N) = (2*9)^N / N! crosses 1 near N = 2e|alpha0|^2 ~ 49
        ns = np.arange(30, 70)
        s = [asymptotic_weight_entropy(int(n), 3.0) for n in ns]
        n_peak = ns[int(np.argmax(s))]
        assert abs(n_peak - 2 * math.e * 9.0) < 3
        assert max(s) > 0.99

    def test_two_term_sum_tracks_entanglement(self):
        e = entanglement_rics(RICSLabel(0, 25, 3.0)).e_bits
        approx = (asymptotic_binomial_entropy(25, 3.0)
                  + asymptotic_weight_entropy(25, 3.0))
        assert abs(e - approx) < 0.1


class TestThresholds:
    def test_fig5_values(self):
        th = thresholds(4.0, 0)
        assert abs(th.n1 - 12.566370) < 1e-5
        assert abs(th.n2 - 86.985019) < 1e-5

    def test_plateau_formula_vs_exact(self):
        th = thresholds(1.0, 4)
        assert abs(th.e_bin - 0.5 * math.log2(2 * math.pi * math.e)) < 1e-12
        assert abs(th.e_bin - 2.0470) < 5e-4
        # the q >> 1 formula overshoots the exact binomial entropy at q=4
        exact = shannon_entropy(binomial_dist(4))
        assert th.e_bin > exact

    def test_single_photon_gap(self):
        th = thresholds(1.0, 1)
        assert abs(th.e_bin - 0.5 * math.log2(math.pi * math.e / 2)) < 1e-12
        assert abs(th.e_bin - 1.047) < 1e-3  # exact value is 1.0


class TestBoundsCheck:
    def test_degenerate_single_component(self):
        report = bounds_check(1.0, 1)
        assert report.satisfied and report.max_q_e == 0.0

    def test_paper_regime_holds(self):
        report = bounds_check(4.0, 8)
        assert report.satisfied
        assert report.lower < report.max_q_e <= report.upper

    def test_high_q_beats_lower_bound_in_plateau(self):
        # region iii: q = N-1 alone exceeds (1/2) log2 N
        e = entanglement_rics(RICSLabel(39, 40, 2.0)).e_bits
        assert e > 0.5 * math.log2(40)

    def test_out_of_regime_rejected(self):
        with pytest.raises(ValueError):
            bounds_check(5.0, 4)

    def test_max_helper_consistent(self):
        assert abs(max_rics_entanglement(2.0, 6)
                   - bounds_check(2.0, 6).max_q_e) < 1e-14
