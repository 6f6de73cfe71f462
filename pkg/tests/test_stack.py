"""Stack geometry, builders and position lookup."""
import math

import pytest
from hypothesis import given, settings, strategies as st

from photonic_tmm.errors import InvalidParameterError, PositionOutOfRangeError
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
from photonic_tmm.tmm.quantum import vacuum_wavenumber


def test_periodic_stack_reference_parameters(periodic_stack):
    assert len(periodic_stack) == 20
    assert total_length(periodic_stack) == 5000.0
    assert [layer.label for layer in periodic_stack] == [LayerLabel.A, LayerLabel.B] * 10
    assert periodic_stack.period_nm == 500.0
    assert periodic_stack.period_count == 10


def test_periodic_stack_zero_periods_is_empty():
    stack = make_periodic_stack(2.68, 1.68, 200, 300, 0)
    assert len(stack) == 0
    assert total_length(stack) == 0.0


def test_periodic_stack_homogeneous_vacuum(vacuum_stack):
    assert len(vacuum_stack) == 6
    assert all(layer.refractive_index == 1.0 for layer in vacuum_stack)


def test_mirror_stack_layout(mirror_stack):
    assert len(mirror_stack) == 20
    assert mirror_stack.layers[9].label is LayerLabel.B
    assert mirror_stack.layers[10].label is LayerLabel.B
    assert total_length(mirror_stack) == 5000.0


def test_mirror_stack_is_palindromic(mirror_stack):
    assert mirror_stack.reversed().layers == mirror_stack.layers


def test_mirror_stack_zero_is_empty():
    assert len(make_mirror_stack(2.68, 1.68, 200, 300, 0)) == 0


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n_A=0.5, n_B=1.68, a=200, b=300, N=1),
        dict(n_A=2.68, n_B=1.68, a=-5, b=300, N=1),
        dict(n_A=2.68, n_B=1.68, a=200, b=0, N=1),
        dict(n_A=2.68, n_B=1.68, a=200, b=300, N=-1),
        dict(n_A=math.nan, n_B=1.68, a=200, b=300, N=1),
    ],
)
def test_periodic_stack_rejects_invalid_parameters(kwargs):
    with pytest.raises(InvalidParameterError):
        make_periodic_stack(**kwargs)


def test_layer_rejects_invalid_thickness():
    with pytest.raises(InvalidParameterError) as excinfo:
        Layer(2.0, 0.0, LayerLabel.A)
    assert excinfo.value.field == "thickness"


def test_total_length_single_layer():
    assert total_length(Stack(layers=(Layer(2.0, 200.0, LayerLabel.A),))) == 200.0


@pytest.mark.parametrize(
    "x, expected",
    [
        (0.0, (0, 0.0)),
        (250.0, (1, 50.0)),
        (500.0, (2, 0.0)),
        (200.0, (1, 0.0)),
        (5000.0, (19, 300.0)),
    ],
)
def test_locate(periodic_stack, x, expected):
    assert locate(periodic_stack, x) == expected


@pytest.mark.parametrize("x", [-1e-9, 5000.0001, math.nan])
def test_locate_out_of_range(periodic_stack, x):
    with pytest.raises(PositionOutOfRangeError):
        locate(periodic_stack, x)


def test_locate_empty_stack():
    with pytest.raises(PositionOutOfRangeError):
        locate(Stack(), 0.0)


@given(x=st.floats(min_value=0.0, max_value=5000.0))
@settings(max_examples=200, deadline=None)
def test_locate_inverts_layer_start(x):
    stack = make_periodic_stack(2.68, 1.68, 200, 300, 10)
    index, local_x = locate(stack, x)
    assert 0.0 <= local_x <= stack.layers[index].thickness
    assert stack.layer_start(index) + local_x == pytest.approx(x, abs=1e-9)


def test_quarter_wave_stack_equal_optical_thickness():
    stack = make_quarter_wave_stack(2.68, 1.68, 10, 200.0)
    a, b = stack.layers[0].thickness, stack.layers[1].thickness
    assert 2.68 * a == pytest.approx(1.68 * b, rel=1e-15)
    assert len(stack) == 20


def test_quarter_wave_omega_gives_quarter_phase():
    omega = quarter_wave_omega(2.68, 200.0)
    assert vacuum_wavenumber(omega) * 2.68 * 200.0 == pytest.approx(math.pi / 2, rel=1e-14)


def test_boundaries_partition_the_stack(periodic_stack):
    boundaries = periodic_stack.boundaries
    assert boundaries[0] == 0.0
    assert boundaries[-1] == 5000.0
    assert len(boundaries) == 21
    assert all(b > a for a, b in zip(boundaries, boundaries[1:]))
