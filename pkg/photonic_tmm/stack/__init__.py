"""Stack model - layer geometry and crystal builders."""
from photonic_tmm.stack.layers import (
    Layer,
    LayerLabel,
    Stack,
    locate,
    make_mirror_stack,
    make_periodic_stack,
    make_quarter_wave_stack,
    quarter_wave_omega,
    total_length,
)

__all__ = [
    "Layer",
    "LayerLabel",
    "Stack",
    "locate",
    "make_mirror_stack",
    "make_periodic_stack",
    "make_quarter_wave_stack",
    "quarter_wave_omega",
    "total_length",
]
