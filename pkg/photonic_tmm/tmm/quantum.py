"""Quantum transfer-matrix chain for photons in (AB)^N crystals.

Every layer carries forward/backward 3-component amplitudes. The 6x6 matching
matrices (entry M0, layer matrices MA and MB) act identically on each of the
three components, so they are stored as their scalar 2x2 blocks; the 6x6 form
is `block ⊗ I3` and is only materialised by `TransferBlock.full_matrix()`.

Conventions:
    ψ(x) = f·exp(+i K0 C x) + b·exp(-i K0 C x) with x local to the layer,
    C = sqrt(n² - sin²θ), K0 = ω/c in rad/nm.
    Continuity of ψ and dψ/dx at each interface.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from photonic_tmm.constants import SPEED_OF_LIGHT_NM_PER_S
from photonic_tmm.errors import InvalidParameterError, SingularSystemError
from photonic_tmm.stack.layers import Layer, Stack

logger = logging.getLogger(__name__)

ComplexVector = NDArray[np.complex128]

_SINGULAR_EPS = 1e-300


def vacuum_wavenumber(omega: float) -> float:
    """K0 = ω/c in rad/nm."""
    return omega / SPEED_OF_LIGHT_NM_PER_S


def c_coefficient(refractive_index: float, sin_theta: float) -> float:
    """Normalised longitudinal wavevector C = sqrt(n² - sin²θ)."""
    return math.sqrt(refractive_index * refractive_index - sin_theta * sin_theta)


@dataclass(frozen=True, slots=True)
class WaveParams:
    """Wavenumber and C-coefficients of one (ω, θ, stack) evaluation."""
    omega: float
    K0: float
    sin_theta: float
    C1: float
    C_of_layer: tuple[float, ...]

    def c_for(self, refractive_index: float) -> float:
        return c_coefficient(refractive_index, self.sin_theta)


def wave_params(omega: float, theta: float, stack: Stack) -> WaveParams:
    """Evaluate K0 and the C-coefficients of the ambient and of every layer."""
    if not (math.isfinite(omega) and omega > 0.0):
        raise InvalidParameterError("omega", f"angular frequency must be > 0, got {omega}")
    if not (0.0 <= theta < math.pi / 2):
        raise InvalidParameterError("theta", f"incidence angle must lie in [0, pi/2), got {theta}")

    sin_theta = math.sin(theta)
    cache: dict[float, float] = {}
    c_values = []
    for layer in stack.layers:
        n = layer.refractive_index
        if n not in cache:
            cache[n] = c_coefficient(n, sin_theta)
        c_values.append(cache[n])

    return WaveParams(
        omega=omega,
        K0=vacuum_wavenumber(omega),
        sin_theta=sin_theta,
        C1=c_coefficient(1.0, sin_theta),
        C_of_layer=tuple(c_values),
    )


@dataclass(frozen=True, slots=True, eq=False)
class TransferBlock:
    """Scalar 2x2 block of a 6x6 matching matrix."""
    matrix: NDArray[np.complex128]

    @classmethod
    def identity(cls) -> "TransferBlock":
        return cls(np.eye(2, dtype=np.complex128))

    @property
    def m11(self) -> complex:
        return complex(self.matrix[0, 0])

    @property
    def m12(self) -> complex:
        return complex(self.matrix[0, 1])

    @property
    def m21(self) -> complex:
        return complex(self.matrix[1, 0])

    @property
    def m22(self) -> complex:
        return complex(self.matrix[1, 1])

    def __matmul__(self, other: "TransferBlock") -> "TransferBlock":
        return TransferBlock(self.matrix @ other.matrix)

    def determinant(self) -> complex:
        return complex(np.linalg.det(self.matrix))

    def full_matrix(self) -> NDArray[np.complex128]:
        """Equivalent 6x6 matrix acting on (forward(1..3), backward(1..3))."""
        return np.kron(self.matrix, np.eye(3, dtype=np.complex128))

    def apply(self, amplitudes: NDArray[np.complex128]) -> NDArray[np.complex128]:
        """Apply to a (2, 3) array of forward/backward component rows."""
        return self.matrix @ amplitudes


@dataclass(frozen=True, slots=True, eq=False)
class CoefficientPair:
    """Forward and backward 3-component amplitudes of one layer."""
    forward: ComplexVector
    backward: ComplexVector

    @classmethod
    def from_rows(cls, amplitudes: NDArray[np.complex128]) -> "CoefficientPair":
        return cls(forward=amplitudes[0].copy(), backward=amplitudes[1].copy())

    def as_rows(self) -> NDArray[np.complex128]:
        return np.vstack((self.forward, self.backward))


@dataclass(frozen=True, slots=True, eq=False)
class ScatterSolution:
    """Solved scattering state of a stack at one (ω, θ)."""
    r: complex
    t: complex
    T: float
    R: float
    F: ComplexVector
    layer_coefficients: tuple[CoefficientPair, ...]
    params: WaveParams
    incident: ComplexVector


def interface_block(c_from: float, c_to: float, phase: float = 0.0) -> TransferBlock:
    """Matching block from a medium with c_from (traversed with the given phase) into c_to."""
    ratio = c_from / c_to
    ahead = np.exp(1j * phase)
    behind = np.exp(-1j * phase)
    matrix = 0.5 * np.array(
        [
            [(1.0 + ratio) * ahead, (1.0 - ratio) * behind],
            [(1.0 - ratio) * ahead, (1.0 + ratio) * behind],
        ],
        dtype=np.complex128,
    )
    return TransferBlock(matrix)


def entry_block(params: WaveParams, n_A: float) -> TransferBlock:
    """M0: vacuum into the first layer, ½[[p, q], [q, p]] with p, q = 1 ± C1/C2."""
    return interface_block(params.C1, params.c_for(n_A))


def layer_block(params: WaveParams, from_layer: Layer, to_C: float) -> TransferBlock:
    """Traverse `from_layer` and match into a medium with coefficient `to_C`.

    MA is (C2 -> C3, thickness a); MB is (C3 -> C2, thickness b).
    """
    c_from = params.c_for(from_layer.refractive_index)
    return interface_block(c_from, to_C, params.K0 * c_from * from_layer.thickness)


def exit_block(params: WaveParams, last_layer: Layer) -> TransferBlock:
    """Last layer into the vacuum half-space on the right."""
    return layer_block(params, last_layer, params.C1)


def _layer_blocks(stack: Stack, params: WaveParams) -> list[TransferBlock]:
    """Blocks that carry layer j's amplitudes into layer j+1, ending with the exit block."""
    blocks = []
    layers = stack.layers
    for j, layer in enumerate(layers):
        to_C = params.C_of_layer[j + 1] if j + 1 < len(layers) else params.C1
        blocks.append(layer_block(params, layer, to_C))
    return blocks


def _as_rows(F: ComplexVector) -> NDArray[np.complex128]:
    F = np.asarray(F, dtype=np.complex128)
    if F.shape != (6,):
        raise InvalidParameterError("F", f"expected 6 boundary amplitudes, got shape {F.shape}")
    return F.reshape(2, 3)


def propagate_coefficients(
    stack: Stack,
    params: WaveParams,
    F: ComplexVector,
) -> list[CoefficientPair]:
    """Per-layer amplitudes from the boundary vector F = (F1..F3 incident, F4..F6 reflected).

    Layer A of period j gets (MB·MA)^(j-1)·M0·F and layer B gets
    (MA·MB)^(j-1)·MA·M0·F; the chain follows the actual layer order, so
    mirror stacks use the same rule with a pure-propagation block at B|B.
    """
    if not stack.layers:
        return []

    amplitudes = entry_block(params, stack.layers[0].refractive_index).apply(_as_rows(F))
    pairs = [CoefficientPair.from_rows(amplitudes)]
    for block in _layer_blocks(stack, params)[:-1]:
        amplitudes = block.apply(amplitudes)
        pairs.append(CoefficientPair.from_rows(amplitudes))
    return pairs


def chain_block(stack: Stack, params: WaveParams) -> TransferBlock:
    """Product of all blocks mapping (incident, reflected) to (transmitted, 0)."""
    if not stack.layers:
        return TransferBlock.identity()
    total = entry_block(params, stack.layers[0].refractive_index)
    for block in _layer_blocks(stack, params):
        total = block @ total
    return total


def solve_scatter(
    stack: Stack,
    theta: float,
    omega: float,
    incident: ComplexVector,
) -> ScatterSolution:
    """Solve the two-point boundary problem for incidence from the left.

    Imposes (t, 0) on the right of the stack, so r = -m21/m22 and
    t = m11 + m12·r for the chained block. Equal vacuum ambients at equal
    angles make T = |t|² and R = |r|².
    """
    incident = np.asarray(incident, dtype=np.complex128)
    if incident.shape != (3,) or not np.any(incident):
        raise InvalidParameterError("incident", "incident amplitude must be a nonzero 3-vector")

    params = wave_params(omega, theta, stack)
    chain = chain_block(stack, params)

    m22 = chain.m22
    if not np.isfinite(m22) or abs(m22) < _SINGULAR_EPS:
        raise SingularSystemError(f"degenerate boundary solve at omega={omega}, theta={theta}")

    r = -chain.m21 / m22
    t = chain.m11 + chain.m12 * r

    F = np.concatenate((incident, r * incident))
    return ScatterSolution(
        r=r,
        t=t,
        T=abs(t) ** 2,
        R=abs(r) ** 2,
        F=F,
        layer_coefficients=tuple(propagate_coefficients(stack, params, F)),
        params=params,
        incident=incident,
    )


def entry_pair(solution: ScatterSolution) -> CoefficientPair:
    """Amplitudes of the vacuum region left of the stack (incident + reflected)."""
    return CoefficientPair(forward=solution.F[:3].copy(), backward=solution.F[3:].copy())


def exit_pair(solution: ScatterSolution) -> CoefficientPair:
    """Amplitudes of the vacuum region right of the stack (transmitted only)."""
    return CoefficientPair(
        forward=solution.t * solution.incident,
        backward=np.zeros(3, dtype=np.complex128),
    )


def gap_center_omega(
    n_A: float,
    n_B: float,
    a: float,
    b: float,
    theta: float = 0.0,
    order: int = 1,
) -> float:
    """Angular frequency at which the per-period phase K0·(C_A·a + C_B·b) equals order·π."""
    sin_theta = math.sin(theta)
    optical_period = c_coefficient(n_A, sin_theta) * a + c_coefficient(n_B, sin_theta) * b
    return order * math.pi * SPEED_OF_LIGHT_NM_PER_S / optical_period
