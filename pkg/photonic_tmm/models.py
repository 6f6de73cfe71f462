"""Pydantic models for run configuration and reports."""
import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from photonic_tmm.constants import (
    DEFAULT_A_NM,
    DEFAULT_B_NM,
    DEFAULT_GAP_THRESHOLD,
    DEFAULT_N_A,
    DEFAULT_N_B,
    DEFAULT_PERIODS,
    DEFAULT_PROFILE_RATIO,
    DEFAULT_PROFILE_SAMPLES,
    DEFAULT_RATIO_MAX,
    DEFAULT_RATIO_MIN,
    DEFAULT_SWEEP_SAMPLES,
    OMEGA0_ANGULAR,
)
from photonic_tmm.fields.observables import CurrentForm
from photonic_tmm.stack.layers import Stack, make_mirror_stack, make_periodic_stack


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


# --- Run Configuration ---

class StackKind(str, Enum):
    """Crystal structure."""
    PERIODIC = "periodic"
    MIRROR = "mirror"


class Command(str, Enum):
    """CLI / HTTP commands."""
    SPECTRUM = "spectrum"
    PROFILE = "profile"
    BANDGAP = "bandgap"
    VALIDATE = "validate"


class StackConfig(_Section):
    """Geometry of (AB)^N or (AB)^m(BA)^m; for mirror stacks `periods` is m."""
    type: StackKind = StackKind.PERIODIC
    n_a: float = Field(DEFAULT_N_A, ge=1.0)
    n_b: float = Field(DEFAULT_N_B, ge=1.0)
    a_nm: float = Field(DEFAULT_A_NM, gt=0.0)
    b_nm: float = Field(DEFAULT_B_NM, gt=0.0)
    periods: int = Field(DEFAULT_PERIODS, ge=0)

    def build(self) -> Stack:
        if self.type is StackKind.MIRROR:
            return make_mirror_stack(self.n_a, self.n_b, self.a_nm, self.b_nm, self.periods)
        return make_periodic_stack(self.n_a, self.n_b, self.a_nm, self.b_nm, self.periods)


class IncidenceConfig(_Section):
    theta_rad: float = Field(0.0, ge=0.0, lt=math.pi / 2)
    omega0_rad_per_s: float = Field(OMEGA0_ANGULAR, gt=0.0)


class SweepConfig(_Section):
    omega_ratio_min: float = Field(DEFAULT_RATIO_MIN, gt=0.0)
    omega_ratio_max: float = Field(DEFAULT_RATIO_MAX, gt=0.0)
    samples: int = Field(DEFAULT_SWEEP_SAMPLES, ge=2)
    gap_threshold: float = Field(DEFAULT_GAP_THRESHOLD, gt=0.0, lt=1.0)

    @model_validator(mode="after")
    def _ordered(self) -> "SweepConfig":
        if self.omega_ratio_min >= self.omega_ratio_max:
            raise ValueError("omega_ratio_min must be smaller than omega_ratio_max")
        return self


class ProfileConfig(_Section):
    omega_ratio: float = Field(DEFAULT_PROFILE_RATIO, gt=0.0)
    samples: int = Field(DEFAULT_PROFILE_SAMPLES, ge=2)
    current_form: CurrentForm = CurrentForm.FLUX


class OutputConfig(_Section):
    directory: str = "output"
    emit_svg: bool = False


class RunConfig(_Section):
    """Complete run configuration; every section defaults to the reference crystal."""
    stack: StackConfig = Field(default_factory=StackConfig)
    incidence: IncidenceConfig = Field(default_factory=IncidenceConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    profile: ProfileConfig = Field(default_factory=ProfileConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @property
    def omega0(self) -> float:
        return self.incidence.omega0_rad_per_s


# --- Validation Report Models ---

class CheckResult(BaseModel):
    """Outcome of one validation check."""
    name: str
    passed: bool
    value: Optional[float] = None
    limit: Optional[float] = None
    omega: Optional[float] = None
    detail: str = ""


class Observation(BaseModel):
    """Recorded, non-gating comparison."""
    name: str
    omega: Optional[float] = None
    values: dict[str, float] = Field(default_factory=dict)
    holds: bool
    detail: str = ""


class ValidationReport(BaseModel):
    """Report produced by the validate command."""
    checks: list[CheckResult] = Field(default_factory=list)
    observations: list[Observation] = Field(default_factory=list)
    runtime_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def summary(self) -> str:
        lines = [f"Validation {'PASSED' if self.passed else 'FAILED'} ({self.runtime_s:.2f} s)"]
        for check in self.checks:
            mark = "ok  " if check.passed else "FAIL"
            value = f" value={check.value:.3e}" if check.value is not None else ""
            limit = f" limit={check.limit:.3e}" if check.limit is not None else ""
            omega = f" omega={check.omega:.9e}" if check.omega is not None else ""
            lines.append(f"  [{mark}] {check.name}{value}{limit}{omega} {check.detail}".rstrip())
        for obs in self.observations:
            mark = "holds" if obs.holds else "differs"
            omega = f" omega={obs.omega:.9e}" if obs.omega is not None else ""
            values = ", ".join(f"{k}={v:.6g}" for k, v in obs.values.items())
            lines.append(f"  [{mark}] {obs.name}{omega} {values} {obs.detail}".rstrip())
        return "\n".join(lines)
