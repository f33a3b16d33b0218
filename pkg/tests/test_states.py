"""Tests for labels, amplitudes, norms, overlaps, expectations, distributions."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qcircle.errors import (
    BoundaryVerdictError,
    InvalidParameterError,
    NonConvergentError,
    SummationOverflowError,
    WindowTooNarrowError,
)
from qcircle.qmath import q_number, theta3
from qcircle.series import Convergence, convergence_gate, empirical_ratio_verdict
from qcircle.states import (
    DeformationParams,
    NormalizationKind,
    StateLabel,
    amplitude,
    angle_distribution,
    eigenvalue_from_label,
    empirical_gate,
    expectation_j,
    expectation_u,
    j_distribution,
    label_from_eigenvalue,
    log_amplitude,
    norm_squared,
    overlap,
    phase_space_point,
    relative_expectation_u,
    wavefunction,
)

TWO_PI = 2.0 * math.pi

# frozen from direct 60-digit summation
NORM_Q1_L0 = 1.7726372048266522            # theta3(0 | i/pi)
NORM_QHALF_L1 = 5.311079794722606          # sum of Eq-(3.15)-type weights
AMP_J2_L2_QHALF = 3.2028548776203972       # e^{1.5/ln 2 - 1}
WAVEFUNCTION_PEAK_Q1_L0 = 2.5066282880429055   # theta3(0 | i/2pi)
THETA2_OVER_THETA3_AT_0 = 0.9997931286552749


class TestParamsAndLabels:
    def test_parameter_validation(self):
        for q, s in ((0.0, 1.0), (-1.0, 1.0), (0.5, 0.0), (0.5, -1.0), (math.nan, 1.0)):
            with pytest.raises(InvalidParameterError):
                DeformationParams(q, s)
        with pytest.raises(InvalidParameterError):
            StateLabel(math.inf, 0.0)
        with pytest.raises(InvalidParameterError):
            StateLabel(0.0, math.nan)

    def test_alpha_normalization(self):
        assert StateLabel(0.0, -0.5).alpha == pytest.approx(TWO_PI - 0.5)
        assert StateLabel(0.0, TWO_PI).alpha == 0.0
        assert StateLabel(0.0, 7.0).alpha == pytest.approx(7.0 - TWO_PI)
        assert StateLabel(0.0, math.pi).alpha == math.pi

    def test_classical_dispatch_band(self):
        assert DeformationParams(1.0).classical
        assert DeformationParams(1.0 + 0.99e-6).classical
        assert not DeformationParams(1.0 + 1.01e-6).classical


class TestEigenvalue:
    def test_trivial_label(self):
        for q in (0.3, 1.0, 2.0):
            assert eigenvalue_from_label(StateLabel(0.0, 0.0), DeformationParams(q)) == 1.0

    def test_classical_value(self):
        v = eigenvalue_from_label(StateLabel(2.0, math.pi), DeformationParams(1.0))
        assert v == pytest.approx(-math.exp(-2.0), rel=1e-15)

    def test_modulus_approaches_excluded_disk(self):
        # for q = 0.5 the modulus tends to e^{-1/(1-q)} = e^{-2} from above
        params = DeformationParams(0.5)
        radius = math.exp(-2.0)
        previous = abs(eigenvalue_from_label(StateLabel(5.0), params))
        for l in (10.0, 20.0, 40.0):
            m = abs(eigenvalue_from_label(StateLabel(l), params))
            assert radius < m < previous
            previous = m
        assert previous == pytest.approx(radius, rel=1e-10)

    def test_modulus_bounded_for_q_above_one(self):
        params = DeformationParams(2.0)
        assert abs(eigenvalue_from_label(StateLabel(-40.0), params)) < math.exp(1.0)
        assert abs(eigenvalue_from_label(StateLabel(-1000.0), params)) <= math.exp(1.0)

    def test_inverse_map_rejects_excluded_disk(self):
        with pytest.raises(InvalidParameterError):
            label_from_eigenvalue(math.exp(-3.0), DeformationParams(0.5))
        with pytest.raises(InvalidParameterError):
            label_from_eigenvalue(0.0, DeformationParams(0.5))

    def test_inverse_map_rejects_outside_the_disk_for_q_above_one(self):
        with pytest.raises(InvalidParameterError):
            label_from_eigenvalue(math.exp(2.0), DeformationParams(2.0))

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(
        l=st.floats(-4.0, 4.0),
        alpha=st.floats(0.0, TWO_PI, exclude_max=True),
        q=st.sampled_from([0.5, 1.0, 2.0]),
    )
    def test_round_trip(self, l, alpha, q):
        params = DeformationParams(q)
        label = StateLabel(l, alpha)
        back = label_from_eigenvalue(eigenvalue_from_label(label, params), params)
        assert back.l == pytest.approx(l, rel=1e-9, abs=1e-9)
        assert math.cos(back.alpha - alpha) == pytest.approx(1.0, abs=1e-12)

    def test_phase_space_point(self):
        params = DeformationParams(0.5)
        pt = phase_space_point(StateLabel(1.0, 2.0), params)
        xi = eigenvalue_from_label(StateLabel(1.0, 2.0), params)
        assert (pt.x, pt.y) == (xi.real, xi.imag)
        assert pt.x**2 + pt.y**2 > math.exp(-4.0)  # outside the excluded disk


class TestAmplitude:
    def test_unit_at_j_zero(self):
        for q, s, l, a in ((0.5, 1.0, 2.0, 0.3), (2.0, 0.7, -1.0, 4.0), (1.0, 1.3, 0.5, 1.0)):
            assert amplitude(0, StateLabel(l, a), DeformationParams(q, s)) == 1.0

    def test_direct_substitution_value(self):
        v = amplitude(2, StateLabel(2.0, 0.0), DeformationParams(0.5))
        assert v.imag == 0.0
        assert v.real == pytest.approx(AMP_J2_L2_QHALF, rel=1e-13)

    def test_classical_branch(self):
        label, s = StateLabel(1.5, 0.7), 1.2
        for j in (-3, 0, 2, 5):
            want = cmath.exp(complex(1.5 * j - s * j * j / 2.0, -j * 0.7))
            got = amplitude(j, label, DeformationParams(1.0, s))
            assert got == pytest.approx(want, rel=1e-13)

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(alpha=st.floats(0.0, TWO_PI, exclude_max=True), j=st.integers(-32, 32))
    def test_magnitude_independent_of_alpha(self, alpha, j):
        params = DeformationParams(0.7, 1.0)
        base = abs(amplitude(j, StateLabel(1.2, 0.0), params))
        turned = abs(amplitude(j, StateLabel(1.2, alpha), params))
        # |e^{i phase}| costs one ulp; the log-magnitude is identical
        assert turned == pytest.approx(base, rel=1e-15)
        assert log_amplitude(j, StateLabel(1.2, alpha), params)[0] == log_amplitude(
            j, StateLabel(1.2, 0.0), params
        )[0]

    def test_phase_is_minus_j_alpha(self):
        lm, ph = log_amplitude(5, StateLabel(0.3, 1.1), DeformationParams(0.5))
        assert ph == -5 * 1.1

    def test_overflow_is_signaled(self):
        with pytest.raises(SummationOverflowError):
            amplitude(-1, StateLabel(-300.0, 0.0), DeformationParams(0.5))


class TestNormSquared:
    def test_classical_gaussian_lattice(self):
        v = norm_squared(StateLabel(0.0, 0.3), DeformationParams(1.0))
        assert v == pytest.approx(NORM_Q1_L0, rel=1e-13)

    def test_frozen_deformed_value(self):
        v = norm_squared(StateLabel(1.0, 0.0), DeformationParams(0.5))
        assert v == pytest.approx(NORM_QHALF_L1, rel=1e-12)

    def test_matches_high_precision_oracle(self):
        for q, s, l in ((0.5, 1.0, 2.0), (2.0, 1.5, -0.7), (0.7, 0.8, 0.5), (3.0, 1.0, 1.1)):
            want = float(oracles.norm_squared(q, s, l))
            got = norm_squared(StateLabel(l, 1.0), DeformationParams(q, s))
            assert got == pytest.approx(want, rel=1e-12)

    def test_divergent_is_refused(self):
        with pytest.raises(NonConvergentError):
            norm_squared(StateLabel(2.0, 0.0), DeformationParams(0.5, 0.5))

    def test_boundary_is_refused(self):
        with pytest.raises(BoundaryVerdictError):
            norm_squared(StateLabel(1.0, 0.0), DeformationParams(0.5, 0.5))

    def test_base_family_bypasses_the_gate(self):
        # q^l = 2^-10 is inside the boundary band where the gate would refuse,
        # yet s = 1 always converges (slowly: relax tol to fit the engine width)
        v = norm_squared(StateLabel(10.0, 0.0), DeformationParams(0.5, 1.0), tol=1e-6)
        assert math.isfinite(v) and v > 0.0


class TestOverlap:
    def test_diagonal_equals_norm(self):
        params = DeformationParams(0.5, 1.0)
        label = StateLabel(1.2, 0.8)
        d = overlap(label, label, params)
        assert d.imag == pytest.approx(0.0, abs=1e-14 * abs(d))
        assert d.real == pytest.approx(norm_squared(label, params), rel=1e-12)

    def test_hermitian_symmetry(self):
        for q, s in ((0.5, 1.0), (2.0, 1.2), (1.0, 1.0)):
            params = DeformationParams(q, s)
            a, b = StateLabel(1.0, 0.4), StateLabel(0.3, 2.2)
            assert overlap(a, b, params) == pytest.approx(overlap(b, a, params).conjugate(), rel=1e-12)

    def test_classical_theta_form(self):
        # theta3((alpha-beta)/2pi - i(l+h)/2pi | i/pi)
        for (l, al), (h, be) in (((0.0, 0.0), (1.0, 0.5)), ((2.0, 1.0), (0.5, 2.5))):
            got = overlap(StateLabel(l, al), StateLabel(h, be), DeformationParams(1.0))
            z = complex((al - be) / TWO_PI, -(l + h) / TWO_PI)
            want = theta3(z, 1j / math.pi)
            assert got == pytest.approx(want, rel=1e-10)

    def test_matches_high_precision_oracle(self):
        for q, s, l, al, h, be in (
            (0.5, 1.0, 1.0, 0.4, 2.0, 1.1),
            (2.0, 1.3, -0.5, 3.0, 0.7, 0.0),
            (0.7, 0.9, 0.3, 1.0, 1.4, 5.0),
        ):
            want = complex(oracles.overlap(q, s, l, al, h, be))
            got = overlap(StateLabel(l, al), StateLabel(h, be), DeformationParams(q, s))
            assert got == pytest.approx(want, rel=1e-12)

    def test_mixed_gate_uses_mean_power(self):
        # q^l and q^h average to 0.5 + tiny: each alone would be fine/divergent
        with pytest.raises(NonConvergentError):
            overlap(StateLabel(2.0, 0.0), StateLabel(3.0, 0.0), DeformationParams(0.5, 0.5))

    def test_mean_power_gate_matches_the_overlap_tail(self):
        # the measured tail ratio of the overlap series is exactly the
        # mean-power gate: cross-check the extrapolated rule empirically
        q, s = 0.5, 0.6
        for l, h in ((0.5, 1.5), (1.0, 3.0), (-1.0, 2.0)):
            la, lb = StateLabel(l, 0.0), StateLabel(h, 0.0)
            params = DeformationParams(q, s)

            def term(j):
                lm = log_amplitude(j, la, params)[0] + log_amplitude(j, lb, params)[0]
                return lm, 0.0

            measured = empirical_ratio_verdict(term, direction=+1)
            mean_pow = (q**l + q**h) / 2.0
            want = (
                Convergence.CONVERGENT if mean_pow > (1 - s) + 1e-3
                else Convergence.DIVERGENT if mean_pow < (1 - s) - 1e-3
                else Convergence.BOUNDARY
            )
            assert measured is want

    def test_cauchy_schwarz(self):
        rng = np.random.default_rng(42)
        for q in (0.3, 0.5, 2.0, 5.0):
            params = DeformationParams(q, 1.0)
            for _ in range(5):
                a = StateLabel(float(rng.uniform(-1.5, 2.0)), float(rng.uniform(0, TWO_PI)))
                b = StateLabel(float(rng.uniform(-1.5, 2.0)), float(rng.uniform(0, TWO_PI)))
                lhs = abs(overlap(a, b, params)) ** 2
                rhs = norm_squared(a, params) * norm_squared(b, params)
                assert lhs <= rhs * (1.0 + 1e-12)


class TestWavefunction:
    def test_depends_only_on_phi_minus_alpha(self):
        params = DeformationParams(0.5)
        for delta in (0.3, 1.7, -2.0):
            a = wavefunction(1.0, StateLabel(1.0, 0.5), params)
            b = wavefunction(1.0 + delta, StateLabel(1.0, 0.5 + delta), params)
            assert b == pytest.approx(a, rel=1e-12)

    def test_classical_peak_value(self):
        v = wavefunction(0.7, StateLabel(0.0, 0.7), DeformationParams(1.0))
        assert v.imag == pytest.approx(0.0, abs=1e-14)
        assert v.real == pytest.approx(WAVEFUNCTION_PEAK_Q1_L0, rel=1e-13)

    def test_magnitude_peaks_at_alpha(self):
        params = DeformationParams(0.5)
        label = StateLabel(1.0, math.pi)
        phis = [TWO_PI * k / 512 for k in range(512)]
        mags = [abs(wavefunction(phi, label, params, tol=1e-10)) for phi in phis]
        assert phis[mags.index(max(mags))] == pytest.approx(math.pi, abs=TWO_PI / 512)

    def test_matches_high_precision_oracle(self):
        for q, s, l, al, phi in ((0.5, 1.0, 1.0, 3.14, 1.0), (2.0, 1.2, -0.5, 0.0, 2.0)):
            want = complex(oracles.wavefunction(q, s, l, al, phi))
            got = wavefunction(phi, StateLabel(l, al), DeformationParams(q, s))
            assert got == pytest.approx(want, rel=1e-12)


class TestExpectationJ:
    def test_tracks_the_label_q_number(self):
        v = expectation_j(StateLabel(2.0, 0.0), DeformationParams(0.5))
        assert abs(v / q_number(2.0, 0.5) - 1.0) < 0.01

    def test_classical_exactness(self):
        for l in (-1.0, -0.5, 0.0, 0.5, 1.0, 2.0):
            assert expectation_j(StateLabel(l, 1.0), DeformationParams(1.0)) == pytest.approx(
                l, abs=1e-10
            )

    def test_classical_general_squeeze(self):
        got = expectation_j(StateLabel(0.8, 0.0), DeformationParams(1.0, 2.0))
        want = float(oracles.expectation_j(1.0, 2.0, 0.8))
        assert got == pytest.approx(want, rel=1e-12)

    def test_within_the_spectrum_bounds(self):
        assert expectation_j(StateLabel(3.0, 0.0), DeformationParams(0.5)) < 2.0
        assert expectation_j(StateLabel(-3.0, 0.0), DeformationParams(2.0)) > -1.0

    def test_convex_mean_of_the_window_spectrum(self):
        for q, l in ((0.5, 1.3), (2.0, -0.7), (0.3, 0.4)):
            params, label = DeformationParams(q), StateLabel(l, 0.0)
            table = j_distribution(label, params)
            values = [q_number(int(j), q) for j in table.support]
            v = expectation_j(label, params)
            assert min(values) <= v <= max(values)

    def test_matches_high_precision_oracle(self):
        for q, s, l in ((0.5, 1.0, 1.3), (2.0, 1.1, -0.4), (0.7, 2.0, 1.0)):
            want = float(oracles.expectation_j(q, s, l))
            got = expectation_j(StateLabel(l, 0.0), DeformationParams(q, s))
            assert got == pytest.approx(want, rel=1e-12)


class TestExpectationU:
    def test_argument_is_alpha(self):
        for q, l, al in ((0.5, 1.0, 0.3), (2.0, -1.0, 2.5), (1.0, 0.5, 1.0), (0.7, 0.0, 5.9)):
            v = expectation_u(StateLabel(l, al), DeformationParams(q))
            assert math.atan2(v.imag, v.real) % TWO_PI == pytest.approx(al, abs=1e-12)

    def test_magnitude_in_unit_disk(self):
        for q, s, l in ((0.5, 1.0, 1.0), (2.0, 1.0, -0.5), (1.0, 1.0, 0.0), (0.7, 1.5, 0.8)):
            assert abs(expectation_u(StateLabel(l, 0.0), DeformationParams(q, s))) <= 1.0

    def test_classical_value(self):
        v = expectation_u(StateLabel(0.0, 0.0), DeformationParams(1.0))
        want = math.exp(-0.25) * THETA2_OVER_THETA3_AT_0
        assert v.imag == 0.0
        assert v.real == pytest.approx(want, rel=1e-12)

    def test_matches_printed_prefactor_form(self):
        # prefactor e^{[l]_q - 1/ln q - 1/(1-q)} with numerator exponents
        # -((1+q)/ln q)[j]_q - (2 q^l/(1-q)) j, s = 1
        for q, l in ((0.5, 1.0), (0.5, 2.0), (2.0, -1.0), (0.7, 0.3)):
            lnq = math.log(q)
            js = np.arange(-200, 201, dtype=float)
            qn_j = np.expm1(js * lnq) / (q - 1.0)
            qpl = q**l
            num = np.exp(-(1.0 + q) / lnq * qn_j - 2.0 * qpl / (1.0 - q) * js)
            den = np.exp(-2.0 / lnq * qn_j - 2.0 * qpl / (1.0 - q) * js)
            prefactor = math.exp(q_number(l, q) - 1.0 / lnq - 1.0 / (1.0 - q))
            want = prefactor * float(np.sum(num) / np.sum(den))
            got = expectation_u(StateLabel(l, 0.0), DeformationParams(q))
            assert got.real == pytest.approx(want, rel=1e-12)


class TestRelativeExpectationU:
    def test_unit_at_zero_angle(self):
        v = relative_expectation_u(StateLabel(1.0, 0.0), DeformationParams(0.5))
        assert v == 1.0 + 0.0j

    def test_pure_phase(self):
        cases = (
            (0.5, 1.0, math.pi / 3.0),
            (2.0, -1.0, 3.0 * math.pi / 2.0),
            (0.3, 0.5, 1.0),
            (5.0, 0.2, 4.4),
        )
        for q, l, al in cases:
            v = relative_expectation_u(StateLabel(l, al), DeformationParams(q))
            assert v == pytest.approx(cmath.exp(1j * al), abs=1e-12)


class TestJDistribution:
    def test_peak_at_the_label(self):
        table = j_distribution(StateLabel(2.0, 0.0), DeformationParams(0.5))
        assert table.argmax() == 2
        assert table.normalization_kind is NormalizationKind.DISCRETE_SUM

    def test_unit_total_mass(self):
        for q, s, l in ((0.5, 1.0, 2.0), (1.0, 1.0, 1.0), (2.0, 1.4, -0.5)):
            table = j_distribution(StateLabel(l, 0.0), DeformationParams(q, s))
            assert float(np.sum(table.weights)) == pytest.approx(1.0, abs=1e-10)

    def test_asymmetric_around_the_peak(self):
        table = j_distribution(StateLabel(2.0, 0.0), DeformationParams(0.5))
        js = list(table.support)
        ratio = table.weights[js.index(3)] / table.weights[js.index(1)]
        assert abs(ratio - 1.0) > 1e-6

    def test_consistent_with_amplitudes(self):
        params, label = DeformationParams(0.5), StateLabel(1.0, 2.0)
        table = j_distribution(label, params)
        norm = norm_squared(label, params)
        for j, p in zip(table.support, table.weights):
            if p > 1e-280:
                direct = abs(amplitude(int(j), label, params)) ** 2 / norm
                assert p == pytest.approx(direct, rel=1e-12)

    def test_argmax_independent_of_alpha(self):
        params = DeformationParams(0.5)
        peaks = {
            j_distribution(StateLabel(2.0, al), params).argmax() for al in (0.0, 1.0, math.pi, 5.0)
        }
        assert peaks == {2}

    def test_classical_discrete_gaussian(self):
        table = j_distribution(StateLabel(1.0, 0.0), DeformationParams(1.0))
        js = np.asarray(table.support, dtype=float)
        gauss = np.exp(-((js - 1.0) ** 2)) / math.sqrt(math.pi)
        assert float(np.max(np.abs(table.weights - gauss))) <= 1e-3

    def test_explicit_window_too_narrow(self):
        with pytest.raises(WindowTooNarrowError):
            j_distribution(StateLabel(0.0, 0.0), DeformationParams(1.0), half_width=3)

    def test_auto_widening_beyond_default(self):
        table = j_distribution(StateLabel(40.0, 0.0), DeformationParams(0.9))
        assert table.support[-1] >= 128
        assert table.argmax() == pytest.approx(40, abs=3)

    def test_divergent_is_refused(self):
        with pytest.raises(NonConvergentError):
            j_distribution(StateLabel(2.0, 0.0), DeformationParams(0.5, 0.5))


class TestAngleDistribution:
    def test_peak_at_alpha(self):
        table = angle_distribution(StateLabel(1.0, math.pi), DeformationParams(0.5), 512)
        assert table.argmax() == pytest.approx(math.pi, abs=TWO_PI / 512)
        assert table.normalization_kind is NormalizationKind.ANGULAR_DENSITY

    def test_unit_angular_mass(self):
        for q, s, l, al in ((0.5, 1.0, 1.0, math.pi), (1.0, 1.0, 0.0, 0.0), (2.0, 1.2, -0.8, 2.0)):
            table = angle_distribution(StateLabel(l, al), DeformationParams(q, s), 512)
            phis = np.append(np.asarray(table.support), TWO_PI)
            dens = np.append(table.weights, table.weights[0])
            integral = float(np.trapezoid(dens, phis)) / TWO_PI
            assert integral == pytest.approx(1.0, abs=1e-6)

    def test_alpha_only_shifts_the_density(self):
        grid = 512
        shift_steps = 100
        al = TWO_PI * shift_steps / grid
        params = DeformationParams(0.5)
        base = angle_distribution(StateLabel(1.0, 0.0), params, grid)
        moved = angle_distribution(StateLabel(1.0, al), params, grid)
        assert np.allclose(np.roll(base.weights, shift_steps), moved.weights, rtol=1e-10)

    def test_matches_wavefunction_pointwise(self):
        params, label = DeformationParams(0.5), StateLabel(1.0, 1.5)
        table = angle_distribution(label, params, 64)
        norm = norm_squared(label, params)
        for phi, p in list(zip(table.support, table.weights))[::7]:
            direct = abs(wavefunction(float(phi), label, params)) ** 2 / norm
            assert p == pytest.approx(direct, rel=1e-10, abs=1e-280)

    def test_grid_validation(self):
        with pytest.raises(InvalidParameterError):
            angle_distribution(StateLabel(1.0, 0.0), DeformationParams(0.5), grid_size=8)


class TestDistributionTable:
    def test_rejects_negative_weights(self):
        from qcircle.states import DistributionTable

        with pytest.raises(InvalidParameterError):
            DistributionTable(
                np.array([0, 1]), np.array([0.5, -0.5]), NormalizationKind.DISCRETE_SUM
            )

    def test_rejects_mismatched_shapes(self):
        from qcircle.states import DistributionTable

        with pytest.raises(InvalidParameterError):
            DistributionTable(
                np.array([0, 1, 2]), np.array([0.5, 0.5]), NormalizationKind.DISCRETE_SUM
            )

    def test_tables_are_immutable(self):
        table = j_distribution(StateLabel(1.0, 0.0), DeformationParams(0.5))
        with pytest.raises(ValueError):
            table.weights[0] = 1.0


class TestContinuityAcrossQOne:
    def test_norm_overlap_wavefunction(self):
        for q in (1.0 - 1e-4, 1.0 + 1e-4):
            deformed = DeformationParams(q)
            classical = DeformationParams(1.0)
            for l in (0.0, 0.5, 1.0, 2.0):
                a = norm_squared(StateLabel(l, 0.0), deformed)
                b = norm_squared(StateLabel(l, 0.0), classical)
                assert abs(a / b - 1.0) < 1e-3
            a = overlap(StateLabel(1.0, 0.0), StateLabel(0.5, math.pi / 2), deformed)
            b = overlap(StateLabel(1.0, 0.0), StateLabel(0.5, math.pi / 2), classical)
            assert abs(a - b) / abs(b) < 1e-3
            a = wavefunction(1.0, StateLabel(2.0, math.pi / 2), deformed)
            b = wavefunction(1.0, StateLabel(2.0, math.pi / 2), classical)
            assert abs(a - b) / abs(b) < 1e-3


class TestEmpiricalGate:
    def test_agrees_with_analytic_gate_off_the_boundary(self):
        for l in (-1.0, 0.0, 1.0, 2.5):
            for s in (0.25, 0.75, 1.5):
                verdict = convergence_gate(0.5, l, s)
                if verdict.status is Convergence.BOUNDARY:
                    continue
                assert empirical_gate(0.5, l, s) is verdict.status

    def test_classical_is_always_convergent(self):
        assert empirical_gate(1.0, 3.0, 0.25) is Convergence.CONVERGENT
