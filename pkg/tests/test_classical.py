"""Classical TE characteristic-matrix oracle and its agreement with the quantum chain."""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from photonic_tmm.constants import OMEGA0_ANGULAR
from photonic_tmm.errors import InvalidParameterError
from photonic_tmm.stack.layers import Layer, LayerLabel, Stack, make_quarter_wave_stack, quarter_wave_omega
from photonic_tmm.tmm.classical import characteristic_matrix, classical_transmissivity, quarter_wave_reference
from photonic_tmm.tmm.quantum import solve_scatter, vacuum_wavenumber


def test_quarter_phase_matrix():
    omega = OMEGA0_ANGULAR
    thickness = math.pi / (2.0 * vacuum_wavenumber(omega) * 2.0)
    matrix = characteristic_matrix(Layer(2.0, thickness, LayerLabel.A), 0.0, omega).matrix
    np.testing.assert_allclose(matrix, [[0.0, -0.5j], [-2.0j, 0.0]], atol=1e-15)


def test_vanishing_phase_is_identity():
    matrix = characteristic_matrix(Layer(3.0, 1e-12, LayerLabel.A), 0.0, 1e10).matrix
    np.testing.assert_allclose(matrix, np.eye(2), atol=1e-15)


@given(
    n=st.floats(min_value=1.0, max_value=4.0),
    d=st.floats(min_value=50.0, max_value=500.0),
    theta=st.floats(min_value=0.0, max_value=1.3),
    ratio=st.floats(min_value=0.1, max_value=5.0),
)
@settings(max_examples=200, deadline=None)
def test_characteristic_matrix_is_unimodular(n, d, theta, ratio):
    matrix = characteristic_matrix(Layer(n, d, LayerLabel.A), theta, ratio * OMEGA0_ANGULAR)
    assert abs(matrix.determinant() - 1.0) < 1e-12


def test_characteristic_matrix_rejects_grazing_angle():
    with pytest.raises(InvalidParameterError):
        characteristic_matrix(Layer(2.0, 100.0, LayerLabel.A), math.pi / 2, OMEGA0_ANGULAR)


def test_empty_stack():
    assert classical_transmissivity(Stack(), 0.4, OMEGA0_ANGULAR) == pytest.approx((1.0, 0.0))


def test_half_wave_layer_is_transparent():
    omega = OMEGA0_ANGULAR
    thickness = math.pi / (vacuum_wavenumber(omega) * 2.5)
    T, R = classical_transmissivity(Stack(layers=(Layer(2.5, thickness, LayerLabel.B),)), 0.0, omega)
    assert T == pytest.approx(1.0, abs=1e-12)
    assert R == pytest.approx(0.0, abs=1e-12)


def test_quarter_wave_reference_trivial_cases():
    assert quarter_wave_reference(2.68, 1.68, 0) == pytest.approx((1.0, 0.0))
    assert quarter_wave_reference(2.0, 2.0, 7) == pytest.approx((1.0, 0.0))
    with pytest.raises(InvalidParameterError):
        quarter_wave_reference(2.68, 1.68, -1)


def test_quarter_wave_reference_sums_to_one():
    T, R = quarter_wave_reference(2.68, 1.68, 10)
    Y = (2.68 / 1.68) ** 20
    assert T + R == pytest.approx(1.0, abs=1e-15)
    assert T == pytest.approx(1.0 - ((1.0 - Y) / (1.0 + Y)) ** 2, rel=1e-9)


def test_both_engines_match_quarter_wave_closed_form(incident):
    stack = make_quarter_wave_stack(2.68, 1.68, 10, 200.0)
    omega = quarter_wave_omega(2.68, 200.0)
    T_reference, _ = quarter_wave_reference(2.68, 1.68, 10)

    T_classical, _ = classical_transmissivity(stack, 0.0, omega)
    T_quantum = solve_scatter(stack, 0.0, omega, incident).T
    assert T_classical == pytest.approx(T_reference, rel=1e-9)
    assert T_quantum == pytest.approx(T_reference, rel=1e-9)


def test_gap_center_matches_quantum(periodic_stack, incident, gap_center):
    T_classical, R_classical = classical_transmissivity(periodic_stack, 0.0, gap_center)
    T_quantum = solve_scatter(periodic_stack, 0.0, gap_center, incident).T
    assert T_classical < 1e-3
    assert abs(T_quantum - T_classical) < 1e-9
    assert abs(T_classical + R_classical - 1.0) < 1e-10


@pytest.mark.parametrize("theta", [0.0, math.pi / 10, math.pi / 6, math.pi / 4, 1.3])
def test_oblique_incidence_matches_quantum(periodic_stack, mirror_stack, incident, theta):
    for stack in (periodic_stack, mirror_stack):
        for ratio in (0.37, 1.25, 1.5, 3.2):
            omega = ratio * OMEGA0_ANGULAR
            T_classical, _ = classical_transmissivity(stack, theta, omega)
            assert abs(solve_scatter(stack, theta, omega, incident).T - T_classical) < 1e-9
