"""Photon probability density and probability current across a solved stack."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from photonic_tmm.constants import DEFAULT_PROFILE_SAMPLES
from photonic_tmm.errors import InvalidParameterError
from photonic_tmm.stack.layers import Stack, locate
from photonic_tmm.tmm.quantum import CoefficientPair, ScatterSolution, WaveParams, solve_scatter

logger = logging.getLogger(__name__)

_MIRROR = np.array([1.0, 1.0, -1.0], dtype=np.complex128)
_TINY = 1e-300
NORMALISATION_TOLERANCE = 1e-12


class CurrentForm(str, Enum):
    """How the backward wave enters the current.

    FLUX: the counter-propagating wave carries the x-mirrored polarisation
    (third component negated) and the result is weighted by C_layer/C1, so
    J/c is the conserved photon flux normalised to the incident flux.
    AMPLITUDE: the four-term product taken with the amplitudes as stored;
    for block-scalar states it is proportional to the density.
    """
    FLUX = "flux"
    AMPLITUDE = "amplitude"


@dataclass(frozen=True, slots=True, eq=False)
class IncidentState:
    """Incident 3-component amplitude, normalised to unit density and unit current."""
    amplitude: NDArray[np.complex128]

    def __post_init__(self) -> None:
        a = np.asarray(self.amplitude, dtype=np.complex128)
        if a.shape != (3,):
            raise InvalidParameterError("incident", f"need 3 components, got shape {a.shape}")
        density = float(np.vdot(a, a).real)
        current = float(_spin_current(a, a).real)
        if abs(density - 1.0) > NORMALISATION_TOLERANCE:
            raise InvalidParameterError("incident", f"density must be 1, got {density:.15g}")
        if abs(current - 1.0) > NORMALISATION_TOLERANCE:
            raise InvalidParameterError("incident", f"current must be +1, got {current:.15g}")
        object.__setattr__(self, "amplitude", a)


@dataclass(frozen=True, slots=True, eq=False)
class FieldProfile:
    """Density ρ(x) and current J(x)/c sampled over [0, total_length]."""
    x: NDArray[np.float64]
    rho: NDArray[np.float64]
    j_over_c: NDArray[np.float64]
    omega: float
    theta: float
    T: float

    def __len__(self) -> int:
        return len(self.x)


def default_incident_state() -> IncidentState:
    """(0, 1/√2, i/√2): unit density and unit rightward current."""
    s = 1.0 / math.sqrt(2.0)
    return IncidentState(np.array([0.0, s, 1j * s], dtype=np.complex128))


def _spin_current(u: NDArray[np.complex128], v: NDArray[np.complex128]) -> complex:
    """i·(u3*·v2 - u2*·v3)."""
    return 1j * (np.conj(u[2]) * v[1] - np.conj(u[1]) * v[2])


def density_at(pair: CoefficientPair, params: WaveParams, C_layer: float, local_x: float) -> float:
    """ρ = |f|² + |b|² + 2·Re[(f†·b)·exp(-2i K0 C x)]."""
    f, b = pair.forward, pair.backward
    phase = np.exp(-2j * params.K0 * C_layer * local_x)
    interference = np.vdot(f, b) * phase
    return float(np.vdot(f, f).real + np.vdot(b, b).real + 2.0 * interference.real)


def current_at(
    pair: CoefficientPair,
    params: WaveParams,
    C_layer: float,
    local_x: float,
    form: CurrentForm = CurrentForm.FLUX,
) -> float:
    """J/c = i(f3*f2 - f2*f3) + i(b3*b2 - b2*b3) + 2·Re[i(f3*b2 - f2*b3)·exp(-2i K0 C x)].

    Under CurrentForm.FLUX the backward amplitude enters mirrored and the sum is
    weighted by C_layer/C1 (see CurrentForm).
    """
    f = pair.forward
    if form is CurrentForm.FLUX:
        b = pair.backward * _MIRROR
        weight = C_layer / params.C1
    else:
        b = pair.backward
        weight = 1.0

    phase = np.exp(-2j * params.K0 * C_layer * local_x)
    value = _spin_current(f, f) + _spin_current(b, b) + 2.0 * (_spin_current(f, b) * phase).real
    return float(weight * value.real)


def sample_profile(
    stack: Stack,
    theta: float,
    omega: float,
    samples: int = DEFAULT_PROFILE_SAMPLES,
    incident: IncidentState | None = None,
    form: CurrentForm = CurrentForm.FLUX,
    solution: ScatterSolution | None = None,
) -> FieldProfile:
    """Evaluate ρ and J/c on a uniform grid over the stack, both endpoints included."""
    if samples < 2:
        raise InvalidParameterError("samples", f"need at least 2 samples, got {samples}")
    if not stack.layers:
        raise InvalidParameterError("stack", "cannot sample a profile of an empty stack")

    incident = incident or default_incident_state()
    if solution is None:
        solution = solve_scatter(stack, theta, omega, incident.amplitude)
    params = solution.params

    x = np.linspace(0.0, stack.total_length, samples)
    rho = np.empty(samples, dtype=np.float64)
    current = np.empty(samples, dtype=np.float64)
    for i, position in enumerate(x):
        index, local_x = locate(stack, float(position))
        pair = solution.layer_coefficients[index]
        c_layer = params.C_of_layer[index]
        rho[i] = density_at(pair, params, c_layer, local_x)
        current[i] = current_at(pair, params, c_layer, local_x, form)

    logger.debug(f"Sampled profile: {samples} points, omega={omega:.6e}, theta={theta:.4f}")
    return FieldProfile(x=x, rho=rho, j_over_c=current, omega=omega, theta=theta, T=solution.T)


def interface_mismatch(
    stack: Stack,
    solution: ScatterSolution,
    form: CurrentForm = CurrentForm.FLUX,
) -> tuple[float, float]:
    """Largest relative jump of ρ and of J/c across the internal interfaces.

    Each interface is evaluated from the left layer at its far edge and from the
    right layer at local_x = 0. Jumps are scaled by the left layer's incoherent
    intensity |f|² + |b|² (weighted by C_layer/C1 for the flux current), which
    bounds ρ and J on both sides of a node or of a nearly opaque stack.
    """
    params = solution.params
    pairs = solution.layer_coefficients
    worst_rho = 0.0
    worst_current = 0.0
    for j in range(len(stack) - 1):
        left, right = pairs[j], pairs[j + 1]
        c_left, c_right = params.C_of_layer[j], params.C_of_layer[j + 1]
        edge = stack.layers[j].thickness

        rho_left = density_at(left, params, c_left, edge)
        rho_right = density_at(right, params, c_right, 0.0)
        intensity = float(np.vdot(left.forward, left.forward).real + np.vdot(left.backward, left.backward).real)
        scale = max(abs(rho_left), abs(rho_right), intensity, _TINY)
        worst_rho = max(worst_rho, abs(rho_left - rho_right) / scale)

        j_left = current_at(left, params, c_left, edge, form)
        j_right = current_at(right, params, c_right, 0.0, form)
        flux_scale = intensity * c_left / params.C1 if form is CurrentForm.FLUX else intensity
        scale = max(abs(j_left), abs(j_right), flux_scale, _TINY)
        worst_current = max(worst_current, abs(j_left - j_right) / scale)
    return worst_rho, worst_current
