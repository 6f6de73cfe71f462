"""Transfer-matrix engines - quantum matching chain and classical oracle."""
from photonic_tmm.tmm.classical import (
    CharacteristicMatrix,
    characteristic_matrix,
    classical_transmissivity,
    quarter_wave_reference,
)
from photonic_tmm.tmm.quantum import (
    CoefficientPair,
    ScatterSolution,
    TransferBlock,
    WaveParams,
    chain_block,
    entry_block,
    entry_pair,
    exit_block,
    exit_pair,
    gap_center_omega,
    layer_block,
    propagate_coefficients,
    solve_scatter,
    wave_params,
)

__all__ = [
    "CharacteristicMatrix",
    "CoefficientPair",
    "ScatterSolution",
    "TransferBlock",
    "WaveParams",
    "chain_block",
    "characteristic_matrix",
    "classical_transmissivity",
    "entry_block",
    "entry_pair",
    "exit_block",
    "exit_pair",
    "gap_center_omega",
    "layer_block",
    "propagate_coefficients",
    "quarter_wave_reference",
    "solve_scatter",
    "wave_params",
]
