"""Shared fixtures: the reference crystal (AB)^10 with n_a=2.68, n_b=1.68, a=200 nm, b=300 nm."""
import pytest

from photonic_tmm.config import Settings
from photonic_tmm.constants import DEFAULT_A_NM, DEFAULT_B_NM, DEFAULT_N_A, DEFAULT_N_B
from photonic_tmm.fields.observables import default_incident_state
from photonic_tmm.stack.layers import make_mirror_stack, make_periodic_stack
from photonic_tmm.tmm.quantum import gap_center_omega
from photonic_tmm.validation import analyse_reference_crystal


@pytest.fixture
def periodic_stack():
    return make_periodic_stack(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM, 10)


@pytest.fixture
def mirror_stack():
    return make_mirror_stack(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM, 5)


@pytest.fixture
def vacuum_stack():
    """Index-1 layers: optically identical to no stack at all."""
    return make_periodic_stack(1.0, 1.0, DEFAULT_A_NM, DEFAULT_B_NM, 3)


@pytest.fixture
def incident():
    return default_incident_state().amplitude


@pytest.fixture
def gap_center():
    """Frequency of per-period phase pi at normal incidence."""
    return gap_center_omega(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM)


@pytest.fixture(scope="session")
def reference():
    """First gap of the reference crystal and its stronger edge resonance."""
    return analyse_reference_crystal(2001, threads=1)


@pytest.fixture
def fast_settings():
    """Reduced case counts for end-to-end runs."""
    return Settings(threads=1, validation_cases=50, invariance_cases=10, resonance_scan_samples=2001)
