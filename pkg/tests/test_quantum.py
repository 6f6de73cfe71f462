"""Quantum matching chain: blocks, coefficient propagation and the boundary solve."""
import math

import numpy as np
import pytest

from photonic_tmm.constants import OMEGA0_ANGULAR
from photonic_tmm.errors import InvalidParameterError
from photonic_tmm.stack.layers import Layer, LayerLabel, Stack
from photonic_tmm.tmm.quantum import (
    TransferBlock,
    chain_block,
    entry_block,
    exit_block,
    exit_pair,
    gap_center_omega,
    interface_block,
    layer_block,
    propagate_coefficients,
    solve_scatter,
    vacuum_wavenumber,
    wave_params,
)


def _single_layer(n, thickness):
    return Stack(layers=(Layer(n, thickness, LayerLabel.A),))


def test_wave_params_normal_incidence(periodic_stack):
    params = wave_params(1e15, 0.0, periodic_stack)
    assert params.C1 == 1.0
    assert params.C_of_layer[0] == pytest.approx(2.68)
    assert params.C_of_layer[1] == pytest.approx(1.68)


def test_wave_params_oblique(periodic_stack):
    params = wave_params(1e15, math.pi / 6, periodic_stack)
    assert params.C1 == pytest.approx(0.8660254, rel=1e-7)
    assert params.C_of_layer[0] == pytest.approx(math.sqrt(2.68**2 - 0.25), rel=1e-12)
    assert params.C_of_layer[0] == pytest.approx(2.6329451, rel=1e-6)


def test_vacuum_wavenumber():
    assert vacuum_wavenumber(1.0e15) == pytest.approx(3.3356410e-3, rel=1e-7)


@pytest.mark.parametrize("omega, theta", [(0.0, 0.0), (-1e15, 0.0), (1e15, math.pi / 2), (1e15, -0.1)])
def test_wave_params_rejects_invalid_input(periodic_stack, omega, theta):
    with pytest.raises(InvalidParameterError):
        wave_params(omega, theta, periodic_stack)


def test_entry_block_normal_incidence(periodic_stack):
    params = wave_params(1e15, 0.0, periodic_stack)
    block = entry_block(params, 2.68)
    p, q = 1 + 1 / 2.68, 1 - 1 / 2.68
    assert p == pytest.approx(1.3731343, rel=1e-7)
    assert q == pytest.approx(0.6268657, rel=1e-6)
    np.testing.assert_allclose(block.matrix, 0.5 * np.array([[p, q], [q, p]]), rtol=1e-15)


def test_entry_block_without_index_step_is_identity(vacuum_stack):
    params = wave_params(1e15, 0.3, vacuum_stack)
    np.testing.assert_allclose(entry_block(params, 1.0).matrix, np.eye(2), atol=1e-15)


def test_entry_block_oblique(periodic_stack):
    params = wave_params(1e15, math.pi / 6, periodic_stack)
    ratio = math.sqrt(0.75) / math.sqrt(2.68**2 - 0.25)
    block = entry_block(params, 2.68)
    assert block.m11 == pytest.approx(0.5 * (1 + ratio))
    assert block.m21 == pytest.approx(0.5 * (1 - ratio))


def test_layer_block_equal_media_is_pure_propagation(periodic_stack):
    params = wave_params(OMEGA0_ANGULAR, 0.0, periodic_stack)
    layer = periodic_stack.layers[0]
    block = layer_block(params, layer, params.C_of_layer[0])
    phase = params.K0 * 2.68 * layer.thickness
    np.testing.assert_allclose(block.matrix, np.diag([np.exp(1j * phase), np.exp(-1j * phase)]), atol=1e-15)


def test_interface_block_without_thickness():
    block = interface_block(2.68, 1.68)
    rho = 2.68 / 1.68
    np.testing.assert_allclose(block.matrix, 0.5 * np.array([[1 + rho, 1 - rho], [1 - rho, 1 + rho]]))


@pytest.mark.parametrize("omega", [0.3 * OMEGA0_ANGULAR, OMEGA0_ANGULAR, 2.7 * OMEGA0_ANGULAR])
def test_layer_block_determinant(periodic_stack, omega):
    params = wave_params(omega, 0.4, periodic_stack)
    layer_a, layer_b = periodic_stack.layers[:2]
    c_a, c_b = params.C_of_layer[:2]
    assert layer_block(params, layer_a, c_b).determinant() == pytest.approx(c_a / c_b, rel=1e-13)
    assert layer_block(params, layer_b, c_a).determinant() == pytest.approx(c_b / c_a, rel=1e-13)


def test_full_matrix_is_block_scalar():
    block = interface_block(2.68, 1.68, 0.7)
    full = block.full_matrix()
    assert full.shape == (6, 6)
    np.testing.assert_array_equal(full, np.kron(block.matrix, np.eye(3)))

    F = np.array([0.1, 0.2 + 1j, -0.3j, 0.5, 0.0, 1.0 - 1j])
    np.testing.assert_allclose(full @ F, block.apply(F.reshape(2, 3)).ravel(), atol=1e-15)


def test_empty_stack_is_identity_scatterer(incident):
    solution = solve_scatter(Stack(), 0.7, OMEGA0_ANGULAR, incident)
    assert solution.t == pytest.approx(1.0)
    assert solution.r == pytest.approx(0.0)
    assert (solution.T, solution.R) == pytest.approx((1.0, 0.0))
    assert solution.layer_coefficients == ()
    assert chain_block(Stack(), wave_params(OMEGA0_ANGULAR, 0.0, Stack())).matrix.tolist() == [[1, 0], [0, 1]]


def test_half_wave_layer_is_transparent(incident):
    omega = OMEGA0_ANGULAR
    thickness = math.pi / (2.0 * vacuum_wavenumber(omega))
    solution = solve_scatter(_single_layer(2.0, thickness), 0.0, omega, incident)
    assert solution.T == pytest.approx(1.0, abs=1e-12)
    assert solution.R == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("ratio", [0.2, 0.84, 1.0, 1.25, 1.5, 3.2])
def test_flux_conservation_reference_crystal(periodic_stack, incident, ratio):
    solution = solve_scatter(periodic_stack, 0.0, ratio * OMEGA0_ANGULAR, incident)
    assert abs(solution.T + solution.R - 1.0) < 1e-10
    assert solution.T == pytest.approx(abs(solution.t) ** 2)


def test_exit_block_targets_vacuum(periodic_stack):
    params = wave_params(OMEGA0_ANGULAR, 0.2, periodic_stack)
    last = periodic_stack.layers[-1]
    block = exit_block(params, last)
    assert block.determinant() == pytest.approx(params.C_of_layer[-1] / params.C1, rel=1e-13)


def test_first_layer_coefficients_are_entry_block_times_F(periodic_stack, incident):
    solution = solve_scatter(periodic_stack, 0.0, OMEGA0_ANGULAR, incident)
    expected = entry_block(solution.params, 2.68).apply(solution.F.reshape(2, 3))
    np.testing.assert_allclose(solution.layer_coefficients[0].as_rows(), expected, atol=1e-14)


def test_second_period_follows_period_matrices(periodic_stack, incident):
    solution = solve_scatter(periodic_stack, 0.3, OMEGA0_ANGULAR, incident)
    params = solution.params
    layer_a, layer_b = periodic_stack.layers[:2]
    c_a, c_b = params.C_of_layer[:2]
    m_a = layer_block(params, layer_a, c_b)
    m_b = layer_block(params, layer_b, c_a)
    m_0 = entry_block(params, 2.68)

    expected = (m_b @ m_a @ m_0).apply(solution.F.reshape(2, 3))
    np.testing.assert_allclose(solution.layer_coefficients[2].as_rows(), expected, atol=1e-13)


@pytest.mark.parametrize("theta", [0.0, math.pi / 5])
def test_coefficients_satisfy_interface_matching(periodic_stack, incident, theta):
    """psi and dpsi/dx continuous at every internal interface."""
    solution = solve_scatter(periodic_stack, theta, 1.3 * OMEGA0_ANGULAR, incident)
    params = solution.params
    pairs = solution.layer_coefficients
    for j in range(len(periodic_stack) - 1):
        c_left, c_right = params.C_of_layer[j], params.C_of_layer[j + 1]
        phase = params.K0 * c_left * periodic_stack.layers[j].thickness
        f, b = pairs[j].forward, pairs[j].backward
        psi_left = f * np.exp(1j * phase) + b * np.exp(-1j * phase)
        slope_left = c_left * (f * np.exp(1j * phase) - b * np.exp(-1j * phase))
        psi_right = pairs[j + 1].forward + pairs[j + 1].backward
        slope_right = c_right * (pairs[j + 1].forward - pairs[j + 1].backward)
        np.testing.assert_allclose(psi_left, psi_right, atol=1e-12)
        np.testing.assert_allclose(slope_left, slope_right, atol=1e-12)


def test_all_vacuum_stack_keeps_incident_wave(vacuum_stack, incident):
    params = wave_params(OMEGA0_ANGULAR, 0.0, vacuum_stack)
    F = np.concatenate((incident, np.zeros(3)))
    for pair in propagate_coefficients(vacuum_stack, params, F):
        assert np.allclose(np.abs(pair.forward), np.abs(incident), atol=1e-15)
        assert np.allclose(pair.backward, 0.0, atol=1e-15)


def test_layer_coefficients_are_block_scalar(periodic_stack, incident):
    solution = solve_scatter(periodic_stack, 0.5, 0.5 * OMEGA0_ANGULAR, incident)
    for pair in solution.layer_coefficients:
        forward_ratio = pair.forward[1:] / incident[1:]
        backward_ratio = pair.backward[1:] / incident[1:]
        assert forward_ratio[0] == pytest.approx(forward_ratio[1], rel=1e-12)
        assert backward_ratio[0] == pytest.approx(backward_ratio[1], rel=1e-12)
        assert pair.forward[0] == 0 and pair.backward[0] == 0


def test_exit_pair_is_transmitted_incident(periodic_stack, incident):
    solution = solve_scatter(periodic_stack, 0.0, OMEGA0_ANGULAR, incident)
    pair = exit_pair(solution)
    np.testing.assert_allclose(pair.forward, solution.t * incident)
    assert not np.any(pair.backward)


def test_gap_center_has_phase_pi():
    omega = gap_center_omega(2.68, 1.68, 200.0, 300.0)
    assert vacuum_wavenumber(omega) * (2.68 * 200.0 + 1.68 * 300.0) == pytest.approx(math.pi, rel=1e-14)
    assert omega / OMEGA0_ANGULAR == pytest.approx(0.8433, abs=1e-3)


def test_solve_rejects_zero_incident(periodic_stack):
    with pytest.raises(InvalidParameterError):
        solve_scatter(periodic_stack, 0.0, OMEGA0_ANGULAR, np.zeros(3))


def test_transfer_block_identity():
    assert TransferBlock.identity().determinant() == pytest.approx(1.0)
