"""Multilayer geometry: layers, stacks and the periodic/mirror builders.

Thicknesses are in nanometres. The ambient medium on both sides of every
stack is vacuum (index 1) and is never stored explicitly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from photonic_tmm.constants import SPEED_OF_LIGHT_NM_PER_S
from photonic_tmm.errors import InvalidParameterError, PositionOutOfRangeError


class LayerLabel(str, Enum):
    """Material label of a layer."""
    A = "A"
    B = "B"


@dataclass(frozen=True, slots=True)
class Layer:
    """Lossless dielectric slab."""
    refractive_index: float
    thickness: float
    label: LayerLabel

    def __post_init__(self) -> None:
        _check_index("refractive_index", self.refractive_index)
        _check_thickness("thickness", self.thickness)


@dataclass(frozen=True)
class Stack:
    """Ordered layers between two vacuum half-spaces.

    `period_nm` is set by the periodic builders and used for per-period
    envelope analysis; it is None for ad-hoc stacks.
    """
    layers: tuple[Layer, ...] = ()
    period_nm: float | None = None
    _starts: NDArray[np.float64] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "layers", tuple(self.layers))
        thicknesses = np.array([layer.thickness for layer in self.layers], dtype=np.float64)
        starts = np.concatenate(([0.0], np.cumsum(thicknesses)))
        object.__setattr__(self, "_starts", starts)

    def __len__(self) -> int:
        return len(self.layers)

    def __iter__(self):
        return iter(self.layers)

    @property
    def total_length(self) -> float:
        return float(self._starts[-1])

    @property
    def boundaries(self) -> NDArray[np.float64]:
        """Layer start positions followed by the total length."""
        return self._starts.copy()

    def layer_start(self, index: int) -> float:
        return float(self._starts[index])

    def reversed(self) -> "Stack":
        return Stack(layers=self.layers[::-1], period_nm=self.period_nm)

    @property
    def period_count(self) -> int:
        if not self.period_nm:
            return 0
        return int(round(self.total_length / self.period_nm))


def _check_index(name: str, value: float) -> None:
    if not math.isfinite(value) or value < 1.0:
        raise InvalidParameterError(name, f"refractive index must be >= 1, got {value}")


def _check_thickness(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise InvalidParameterError(name, f"thickness must be > 0 nm, got {value}")


def _check_count(name: str, value: int) -> None:
    if value < 0:
        raise InvalidParameterError(name, f"count must be >= 0, got {value}")


def _pair(n_A: float, n_B: float, a: float, b: float) -> tuple[Layer, Layer]:
    _check_index("n_A", n_A)
    _check_index("n_B", n_B)
    _check_thickness("a", a)
    _check_thickness("b", b)
    return Layer(n_A, a, LayerLabel.A), Layer(n_B, b, LayerLabel.B)


def make_periodic_stack(n_A: float, n_B: float, a: float, b: float, N: int) -> Stack:
    """Build (AB)^N."""
    _check_count("N", N)
    layer_a, layer_b = _pair(n_A, n_B, a, b)
    return Stack(layers=(layer_a, layer_b) * N, period_nm=a + b)


def make_mirror_stack(n_A: float, n_B: float, a: float, b: float, m: int) -> Stack:
    """Build the palindromic (AB)^m (BA)^m."""
    _check_count("m", m)
    layer_a, layer_b = _pair(n_A, n_B, a, b)
    return Stack(layers=(layer_a, layer_b) * m + (layer_b, layer_a) * m, period_nm=a + b)


def make_quarter_wave_stack(n_A: float, n_B: float, N: int, a: float) -> Stack:
    """Build (AB)^N with equal optical thicknesses n_A*a = n_B*b."""
    _check_index("n_B", n_B)
    _check_thickness("a", a)
    return make_periodic_stack(n_A, n_B, a, n_A * a / n_B, N)


def quarter_wave_omega(n_A: float, a: float) -> float:
    """Angular frequency at which a layer of index n_A and thickness a is a quarter wave."""
    _check_index("n_A", n_A)
    _check_thickness("a", a)
    return math.pi * SPEED_OF_LIGHT_NM_PER_S / (2.0 * n_A * a)


def total_length(stack: Stack) -> float:
    """Sum of layer thicknesses in nm."""
    return stack.total_length


def locate(stack: Stack, x: float) -> tuple[int, float]:
    """Map a global position to (layer index, position inside that layer).

    Interface points belong to the layer on their right, except x = total_length
    which belongs to the last layer.
    """
    if not stack.layers:
        raise PositionOutOfRangeError("x", "cannot locate a position in an empty stack")
    length = stack.total_length
    if not (0.0 <= x <= length):
        raise PositionOutOfRangeError("x", f"{x} nm outside [0, {length}] nm")

    starts = stack._starts
    index = int(np.searchsorted(starts, x, side="right")) - 1
    index = min(index, len(stack.layers) - 1)
    return index, float(x - starts[index])
