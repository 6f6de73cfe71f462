"""Classical TE thin-film characteristic-matrix (Abelès) calculator.

Independent of the quantum chain except for the wave parameters: the two
engines only agree if the quantum matching really reproduces TE optics.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from photonic_tmm.errors import InvalidParameterError
from photonic_tmm.stack.layers import Layer, Stack
from photonic_tmm.tmm.quantum import c_coefficient, vacuum_wavenumber, wave_params


@dataclass(frozen=True, slots=True, eq=False)
class CharacteristicMatrix:
    """Unimodular 2x2 matrix relating tangential (E, H) across a layer."""
    matrix: NDArray[np.complex128]

    def determinant(self) -> complex:
        return complex(np.linalg.det(self.matrix))


def _layer_matrix(delta: float, q: float) -> NDArray[np.complex128]:
    cos_d = math.cos(delta)
    sin_d = math.sin(delta)
    return np.array(
        [[cos_d, -1j * sin_d / q], [-1j * q * sin_d, cos_d]],
        dtype=np.complex128,
    )


def characteristic_matrix(layer: Layer, theta: float, omega: float) -> CharacteristicMatrix:
    """[[cos δ, -i sin δ / q], [-i q sin δ, cos δ]] with δ = K0·C·d and q = C (TE)."""
    if not (0.0 <= theta < math.pi / 2):
        raise InvalidParameterError("theta", f"incidence angle must lie in [0, pi/2), got {theta}")
    q = c_coefficient(layer.refractive_index, math.sin(theta))
    delta = vacuum_wavenumber(omega) * q * layer.thickness
    return CharacteristicMatrix(_layer_matrix(delta, q))


def classical_transmissivity(stack: Stack, theta: float, omega: float) -> tuple[float, float]:
    """(T, R) of the stack between vacuum half-spaces for TE incidence."""
    params = wave_params(omega, theta, stack)
    total = np.eye(2, dtype=np.complex128)
    for layer, q in zip(stack.layers, params.C_of_layer):
        total = total @ _layer_matrix(params.K0 * q * layer.thickness, q)

    q0 = qs = params.C1
    (m11, m12), (m21, m22) = total
    denominator = q0 * m11 + q0 * qs * m12 + m21 + qs * m22
    t = 2.0 * q0 / denominator
    r = (q0 * m11 + q0 * qs * m12 - m21 - qs * m22) / denominator
    return float((qs / q0) * abs(t) ** 2), float(abs(r) ** 2)


def quarter_wave_reference(n_A: float, n_B: float, N: int) -> tuple[float, float]:
    """Closed-form (T, R) of a quarter-wave (AB)^N at normal incidence in vacuum."""
    if N < 0:
        raise InvalidParameterError("N", f"count must be >= 0, got {N}")
    admittance = (n_A / n_B) ** (2 * N)
    R = ((1.0 - admittance) / (1.0 + admittance)) ** 2
    T = 4.0 * admittance / (1.0 + admittance) ** 2
    return T, R
