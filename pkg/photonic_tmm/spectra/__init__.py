"""Spectra - frequency sweeps, band gaps and profile analysis."""
from photonic_tmm.spectra.analysis import (
    AmplitudeStats,
    Resonance,
    amplitude_stats,
    decay_length,
    envelope,
    find_resonance,
)
from photonic_tmm.spectra.sweep import GapInterval, Spectrum, find_band_gaps, sweep_frequency

__all__ = [
    "AmplitudeStats",
    "GapInterval",
    "Resonance",
    "Spectrum",
    "amplitude_stats",
    "decay_length",
    "envelope",
    "find_band_gaps",
    "find_resonance",
    "sweep_frequency",
]
