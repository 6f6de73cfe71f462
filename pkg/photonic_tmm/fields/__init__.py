"""Field observables - probability density and current profiles."""
from photonic_tmm.fields.observables import (
    CurrentForm,
    FieldProfile,
    IncidentState,
    current_at,
    default_incident_state,
    density_at,
    interface_mismatch,
    sample_profile,
)

__all__ = [
    "CurrentForm",
    "FieldProfile",
    "IncidentState",
    "current_at",
    "default_incident_state",
    "density_at",
    "interface_mismatch",
    "sample_profile",
]
