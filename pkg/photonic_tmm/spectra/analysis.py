"""Profile statistics, tunnelling decay fits and resonance location."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import minimize_scalar

from photonic_tmm.errors import DegenerateFitError, InvalidParameterError
from photonic_tmm.fields.observables import FieldProfile, default_incident_state
from photonic_tmm.stack.layers import Stack
from photonic_tmm.spectra.sweep import GapInterval, Spectrum
from photonic_tmm.tmm.quantum import solve_scatter

logger = logging.getLogger(__name__)

_MIN_FIT_PERIODS = 3
_LOG_FLOOR = 1e-300


@dataclass(frozen=True, slots=True)
class AmplitudeStats:
    """Peak, trough and mean of ρ over a profile."""
    peak: float
    trough: float
    mean: float


@dataclass(frozen=True, slots=True)
class Resonance:
    """Transmission maximum next to a gap edge."""
    omega: float
    T: float
    side: Literal["lower", "upper"]


def amplitude_stats(profile: FieldProfile) -> AmplitudeStats:
    if not len(profile):
        raise InvalidParameterError("profile", "profile is empty")
    rho = profile.rho
    return AmplitudeStats(peak=float(np.max(rho)), trough=float(np.min(rho)), mean=float(np.mean(rho)))


def envelope(profile: FieldProfile, stack: Stack) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Per-period maximum of ρ and the position where it occurs."""
    if not stack.period_nm:
        raise DegenerateFitError("stack has no period length")
    periods = stack.period_count
    if periods < _MIN_FIT_PERIODS:
        raise DegenerateFitError(f"need at least {_MIN_FIT_PERIODS} periods, got {periods}")

    period_index = np.minimum((profile.x // stack.period_nm).astype(np.int64), periods - 1)
    positions, peaks = [], []
    for k in range(periods):
        members = np.flatnonzero(period_index == k)
        if not len(members):
            continue
        best = members[np.argmax(profile.rho[members])]
        positions.append(profile.x[best])
        peaks.append(profile.rho[best])

    if len(peaks) < _MIN_FIT_PERIODS:
        raise DegenerateFitError(f"only {len(peaks)} periods contain samples")
    return np.asarray(positions), np.asarray(peaks)


def decay_length(profile: FieldProfile, stack: Stack) -> float | None:
    """Envelope decay length in nm from a least-squares fit of ln(envelope) against x.

    Returns None when the envelope does not decay.
    """
    positions, peaks = envelope(profile, stack)
    slope, _ = np.polyfit(positions, np.log(np.maximum(peaks, _LOG_FLOOR)), 1)
    if slope >= 0.0:
        return None
    return float(-1.0 / slope)


def _transmissivity(stack: Stack, theta: float, omega: float) -> float:
    return solve_scatter(stack, theta, omega, default_incident_state().amplitude).T


def find_resonance(
    stack: Stack,
    theta: float,
    spectrum: Spectrum,
    gap: GapInterval,
    side: Literal["lower", "upper"] = "upper",
) -> Resonance | None:
    """First transmission maximum outside the gap on the given side.

    Walks uphill from the gap edge on the sampled spectrum, then refines the
    sampled maximum inside its neighbouring grid cells.
    """
    T = spectrum.T
    last = len(T) - 1
    if side == "upper":
        i = gap.index_hi + 1
        if i > last:
            return None
        while i < last and T[i + 1] > T[i]:
            i += 1
    else:
        i = gap.index_lo - 1
        if i < 0:
            return None
        while i > 0 and T[i - 1] > T[i]:
            i -= 1

    lo = float(spectrum.omega[max(i - 1, 0)])
    hi = float(spectrum.omega[min(i + 1, last)])
    scale = float(spectrum.omega[i])

    result = minimize_scalar(
        lambda u: -_transmissivity(stack, theta, u * scale),
        bounds=(lo / scale, hi / scale),
        method="bounded",
        options={"xatol": 1e-12},
    )
    omega = float(result.x * scale)
    T_peak = -float(result.fun)
    if T_peak < T[i]:
        omega, T_peak = scale, float(T[i])

    logger.info(f"Resonance on {side} side of gap: omega={omega:.9e} rad/s, T={T_peak:.12f}")
    return Resonance(omega=omega, T=T_peak, side=side)
