"""Frequency sweeps and band-gap detection."""
from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from photonic_tmm.config import get_settings
from photonic_tmm.constants import DEFAULT_GAP_THRESHOLD
from photonic_tmm.errors import InvalidParameterError
from photonic_tmm.fields.observables import default_incident_state
from photonic_tmm.stack.layers import Stack
from photonic_tmm.tmm.classical import classical_transmissivity
from photonic_tmm.tmm.quantum import solve_scatter

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class Spectrum:
    """Quantum T, R and classical T on a strictly increasing ω grid (rad/s)."""
    omega: NDArray[np.float64]
    T: NDArray[np.float64]
    R: NDArray[np.float64]
    T_classical: NDArray[np.float64]

    def __len__(self) -> int:
        return len(self.omega)

    def max_oracle_deviation(self) -> float:
        if not len(self.omega):
            return 0.0
        return float(np.max(np.abs(self.T - self.T_classical)))


@dataclass(frozen=True, slots=True)
class GapInterval:
    """Contiguous run of samples with T below the detection threshold."""
    omega_lo: float
    omega_hi: float
    min_T: float
    index_lo: int
    index_hi: int

    @property
    def omega_center(self) -> float:
        """Midpoint of the run."""
        return 0.5 * (self.omega_lo + self.omega_hi)


def _worker_count(samples: int, threads: int | None) -> int:
    """Upper bound on sweep workers.

    Per-frequency work is a chain of small numpy 2x2 products that mostly holds
    the GIL, so this caps concurrency rather than promising a speedup.
    """
    threads = threads or get_settings().threads or os.cpu_count() or 1
    return max(1, min(threads, samples))


def sweep_frequency(
    stack: Stack,
    theta: float,
    omega_min: float,
    omega_max: float,
    samples: int,
    threads: int | None = None,
) -> Spectrum:
    """Quantum and classical transmissivity on a uniform grid including both endpoints."""
    if not omega_min < omega_max:
        raise InvalidParameterError("omega_min", f"need omega_min < omega_max, got {omega_min} >= {omega_max}")
    if samples < 2:
        raise InvalidParameterError("samples", f"need at least 2 samples, got {samples}")

    grid = np.linspace(omega_min, omega_max, samples)
    incident = default_incident_state().amplitude

    def evaluate(omega: float) -> tuple[float, float, float]:
        solution = solve_scatter(stack, theta, float(omega), incident)
        T_classical, _ = classical_transmissivity(stack, theta, float(omega))
        return solution.T, solution.R, T_classical

    workers = _worker_count(samples, threads)
    logger.info(f"Sweeping {samples} frequencies over {len(stack)} layers with {workers} worker(s)")

    if workers == 1:
        rows = [evaluate(omega) for omega in grid]
    else:
        # map() keeps grid order regardless of completion order
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(evaluate, grid, chunksize=max(1, samples // (4 * workers))))

    values = np.array(rows, dtype=np.float64).reshape(samples, 3)
    return Spectrum(omega=grid, T=values[:, 0], R=values[:, 1], T_classical=values[:, 2])


def find_band_gaps(spectrum: Spectrum, threshold: float = DEFAULT_GAP_THRESHOLD) -> list[GapInterval]:
    """Maximal runs of at least two consecutive samples with T < threshold."""
    if not 0.0 < threshold < 1.0:
        raise InvalidParameterError("threshold", f"threshold must lie in (0, 1), got {threshold}")

    below = np.asarray(spectrum.T) < threshold
    # Run boundaries from the padded mask derivative
    edges = np.diff(np.concatenate(([0], below.astype(np.int8), [0])))
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1) - 1

    gaps = []
    for lo, hi in zip(starts, stops):
        if hi - lo + 1 < 2:
            continue
        gaps.append(
            GapInterval(
                omega_lo=float(spectrum.omega[lo]),
                omega_hi=float(spectrum.omega[hi]),
                min_T=float(np.min(spectrum.T[lo:hi + 1])),
                index_lo=int(lo),
                index_hi=int(hi),
            )
        )
    return gaps
