"""Photonic TMM - quantum transfer-matrix simulator for 1D photonic crystals."""
from photonic_tmm.fields import default_incident_state, sample_profile
from photonic_tmm.spectra import find_band_gaps, sweep_frequency
from photonic_tmm.stack import make_mirror_stack, make_periodic_stack
from photonic_tmm.tmm import classical_transmissivity, solve_scatter

__version__ = "1.0.0"

__all__ = [
    "classical_transmissivity",
    "default_incident_state",
    "find_band_gaps",
    "make_mirror_stack",
    "make_periodic_stack",
    "sample_profile",
    "solve_scatter",
    "sweep_frequency",
]
