"""Acceptance and property suite behind the `validate` command.

Engine-level checks run on seeded random stacks; the reference-crystal checks
use (AB)^10 with n_a=2.68, n_b=1.68, a=200 nm, b=300 nm at normal incidence.
Every frequency-dependent check records the angular frequency it used.
"""
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass

import numpy as np

from photonic_tmm.config import Settings, get_settings
from photonic_tmm.constants import (
    AMPLITUDE_CONTRAST,
    BLOCK_SCALAR_TOLERANCE,
    CONTINUITY_TOLERANCE,
    DEFAULT_A_NM,
    DEFAULT_B_NM,
    DEFAULT_GAP_THRESHOLD,
    DEFAULT_N_A,
    DEFAULT_N_B,
    DEFAULT_PERIODS,
    DEFAULT_RATIO_MAX,
    DEFAULT_RATIO_MIN,
    FLUX_TOLERANCE,
    OMEGA0_ANGULAR,
    OMEGA0_NUMERIC,
    ORACLE_TOLERANCE,
    REFERENCE_RATIOS,
    STUDY_ANGLES,
    TUNNEL_RATIO,
)
from photonic_tmm.fields.observables import (
    FieldProfile,
    current_at,
    default_incident_state,
    interface_mismatch,
    sample_profile,
)
from photonic_tmm.models import CheckResult, Observation, RunConfig, ValidationReport
from photonic_tmm.spectra.analysis import amplitude_stats, decay_length, envelope, find_resonance
from photonic_tmm.spectra.sweep import GapInterval, Spectrum, find_band_gaps, sweep_frequency
from photonic_tmm.stack.layers import (
    Layer,
    LayerLabel,
    Stack,
    make_mirror_stack,
    make_periodic_stack,
    make_quarter_wave_stack,
    quarter_wave_omega,
)
from photonic_tmm.tmm.classical import classical_transmissivity, quarter_wave_reference
from photonic_tmm.tmm.quantum import entry_pair, exit_pair, gap_center_omega, solve_scatter

logger = logging.getLogger(__name__)

# Random case ranges
MAX_LAYERS = 20
INDEX_RANGE = (1.0, 4.0)
THICKNESS_RANGE_NM = (50.0, 500.0)
THETA_RANGE = (0.0, 1.3)
OMEGA_RATIO_RANGE = (0.1, 5.0)
SCALE_RANGE = (0.5, 2.0)

# Scan of the reference crystal around its first gap, in units of the gap center
REFERENCE_SCAN = (0.1, 2.0)

_E2 = np.array([0.0, 1.0, 0.0], dtype=np.complex128)
_E3 = np.array([0.0, 0.0, 1.0], dtype=np.complex128)


@dataclass(frozen=True, slots=True)
class RandomCase:
    stack: Stack
    theta: float
    omega: float


@dataclass(frozen=True, slots=True, eq=False)
class ReferenceCrystal:
    """Solved reference crystal: first gap, its center and the stronger adjacent resonance."""
    stack: Stack
    spectrum: Spectrum
    gap: GapInterval
    gap_center: float
    gap_profile: FieldProfile
    resonance_omega: float
    resonance_T: float
    resonance_side: str
    resonance_profile: FieldProfile
    pass_band: tuple[float, ...]


def random_stack(rng: np.random.Generator) -> Stack:
    """Up to MAX_LAYERS layers with random index and thickness, labels alternating A/B."""
    count = int(rng.integers(1, MAX_LAYERS + 1))
    indices = rng.uniform(*INDEX_RANGE, size=count)
    thicknesses = rng.uniform(*THICKNESS_RANGE_NM, size=count)
    labels = (LayerLabel.A, LayerLabel.B)
    return Stack(
        layers=tuple(
            Layer(float(n), float(d), labels[i % 2])
            for i, (n, d) in enumerate(zip(indices, thicknesses))
        )
    )


def random_cases(rng: np.random.Generator, count: int) -> list[RandomCase]:
    cases = []
    for _ in range(count):
        stack = random_stack(rng)
        theta = float(rng.uniform(*THETA_RANGE))
        omega = float(rng.uniform(*OMEGA_RATIO_RANGE)) * OMEGA0_ANGULAR
        cases.append(RandomCase(stack=stack, theta=theta, omega=omega))
    return cases


def reference_stack(periods: int = DEFAULT_PERIODS) -> Stack:
    return make_periodic_stack(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM, periods)


def _peak(stack: Stack, omega: float, theta: float = 0.0) -> float:
    return amplitude_stats(sample_profile(stack, theta, omega)).peak


# --- Engine checks ---

def check_oracle_equivalence(cases: list[RandomCase]) -> list[CheckResult]:
    """Quantum vs classical transmissivity and flux conservation on random stacks."""
    incident = default_incident_state().amplitude
    worst_oracle = worst_flux = 0.0
    worst_oracle_omega = worst_flux_omega = None
    start = time.perf_counter()
    for case in cases:
        solution = solve_scatter(case.stack, case.theta, case.omega, incident)
        T_classical, _ = classical_transmissivity(case.stack, case.theta, case.omega)
        oracle = abs(solution.T - T_classical)
        flux = abs(solution.T + solution.R - 1.0)
        if oracle >= worst_oracle:
            worst_oracle, worst_oracle_omega = oracle, case.omega
        if flux >= worst_flux:
            worst_flux, worst_flux_omega = flux, case.omega
    elapsed = time.perf_counter() - start

    return [
        CheckResult(
            name="quantum_classical_equivalence",
            passed=worst_oracle < ORACLE_TOLERANCE,
            value=worst_oracle,
            limit=ORACLE_TOLERANCE,
            omega=worst_oracle_omega,
            detail=f"{len(cases)} random cases in {elapsed:.2f} s",
        ),
        CheckResult(
            name="flux_conservation",
            passed=worst_flux < FLUX_TOLERANCE,
            value=worst_flux,
            limit=FLUX_TOLERANCE,
            omega=worst_flux_omega,
            detail=f"max |T + R - 1| over {len(cases)} random cases",
        ),
    ]


def check_quarter_wave() -> CheckResult:
    """Both engines against the closed form at the exact quarter-wave frequency."""
    stack = make_quarter_wave_stack(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_PERIODS, DEFAULT_A_NM)
    omega = quarter_wave_omega(DEFAULT_N_A, DEFAULT_A_NM)
    T_reference, _ = quarter_wave_reference(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_PERIODS)

    T_quantum = solve_scatter(stack, 0.0, omega, default_incident_state().amplitude).T
    T_classical, _ = classical_transmissivity(stack, 0.0, omega)
    deviation = max(abs(T_quantum - T_reference), abs(T_classical - T_reference)) / T_reference
    return CheckResult(
        name="quarter_wave_closed_form",
        passed=deviation < ORACLE_TOLERANCE,
        value=deviation,
        limit=ORACLE_TOLERANCE,
        omega=omega,
        detail=f"T_ref={T_reference:.12e}, b={stack.layers[1].thickness:.6f} nm",
    )


def check_invariance(cases: list[RandomCase], rng: np.random.Generator) -> list[CheckResult]:
    """Reversal reciprocity, ω/thickness scale invariance and block-scalar consistency."""
    incident = default_incident_state().amplitude
    worst_reversal = worst_scale = worst_block = 0.0
    for case in cases:
        T = solve_scatter(case.stack, case.theta, case.omega, incident).T

        T_reversed = solve_scatter(case.stack.reversed(), case.theta, case.omega, incident).T
        worst_reversal = max(worst_reversal, abs(T - T_reversed))

        s = float(rng.uniform(*SCALE_RANGE))
        scaled = Stack(
            layers=tuple(Layer(l.refractive_index, l.thickness / s, l.label) for l in case.stack.layers)
        )
        T_scaled = solve_scatter(scaled, case.theta, case.omega * s, incident).T
        worst_scale = max(worst_scale, abs(T - T_scaled))

        along_e2 = solve_scatter(case.stack, case.theta, case.omega, _E2)
        along_e3 = solve_scatter(case.stack, case.theta, case.omega, _E3)
        worst_block = max(
            worst_block,
            abs(along_e2.r - along_e3.r),
            abs(along_e2.t - along_e3.t),
            abs(along_e2.T - along_e3.T),
        )

    return [
        CheckResult(
            name="reversal_reciprocity",
            passed=worst_reversal < FLUX_TOLERANCE,
            value=worst_reversal,
            limit=FLUX_TOLERANCE,
            detail=f"{len(cases)} random cases",
        ),
        CheckResult(
            name="scale_invariance",
            passed=worst_scale < FLUX_TOLERANCE,
            value=worst_scale,
            limit=FLUX_TOLERANCE,
            detail=f"{len(cases)} random cases, scale factors in {SCALE_RANGE}",
        ),
        CheckResult(
            name="block_scalar_consistency",
            passed=worst_block < BLOCK_SCALAR_TOLERANCE,
            value=worst_block,
            limit=BLOCK_SCALAR_TOLERANCE,
            detail="incident e2 vs e3",
        ),
    ]


# --- Reference crystal ---

def analyse_reference_crystal(samples: int, threads: int | None = None) -> ReferenceCrystal:
    """Scan the reference crystal across its first gap and pick the stronger edge resonance.

    Raises LookupError when the scan shows no gap around the per-period phase π.
    """
    stack = reference_stack()
    center = gap_center_omega(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM)
    spectrum = sweep_frequency(
        stack, 0.0, REFERENCE_SCAN[0] * center, REFERENCE_SCAN[1] * center, samples, threads=threads
    )
    gap = next(
        (g for g in find_band_gaps(spectrum, DEFAULT_GAP_THRESHOLD) if g.omega_lo <= center <= g.omega_hi),
        None,
    )
    if gap is None:
        raise LookupError(f"no gap contains the phase-pi frequency {center:.9e} rad/s")

    candidates = []
    for side in ("lower", "upper"):
        resonance = find_resonance(stack, 0.0, spectrum, gap, side=side)
        if resonance is None:
            continue
        profile = sample_profile(stack, 0.0, resonance.omega)
        candidates.append((amplitude_stats(profile).peak, resonance, profile))
    if not candidates:
        raise LookupError("no resonance next to the first gap")
    _, resonance, resonance_profile = max(candidates, key=lambda item: item[0])
    logger.info(f"Reference resonance ({resonance.side} edge): omega={resonance.omega:.9e} rad/s")

    return ReferenceCrystal(
        stack=stack,
        spectrum=spectrum,
        gap=gap,
        gap_center=center,
        gap_profile=sample_profile(stack, 0.0, center),
        resonance_omega=resonance.omega,
        resonance_T=resonance.T,
        resonance_side=resonance.side,
        resonance_profile=resonance_profile,
        pass_band=tuple(c[1].omega for c in candidates) + (0.5 * gap.omega_lo,),
    )


def check_interfaces(reference: ReferenceCrystal) -> list[CheckResult]:
    """Interface continuity, exit current and entry current at in-gap and pass-band frequencies."""
    gap = reference.gap
    in_gap = (reference.gap_center, gap.omega_lo + 0.25 * (gap.omega_hi - gap.omega_lo))
    frequencies = in_gap + reference.pass_band
    incident = default_incident_state().amplitude

    worst_rho = worst_current = worst_exit = worst_entry = 0.0
    for omega in frequencies:
        solution = solve_scatter(reference.stack, 0.0, omega, incident)
        params = solution.params
        rho_jump, current_jump = interface_mismatch(reference.stack, solution)
        worst_rho = max(worst_rho, rho_jump)
        worst_current = max(worst_current, current_jump)

        last = len(reference.stack) - 1
        exit_values = (
            current_at(exit_pair(solution), params, params.C1, 0.0),
            current_at(
                solution.layer_coefficients[last],
                params,
                params.C_of_layer[last],
                reference.stack.layers[last].thickness,
            ),
        )
        worst_exit = max(worst_exit, *(abs(value - solution.T) for value in exit_values))
        entry = current_at(entry_pair(solution), params, params.C1, 0.0)
        worst_entry = max(worst_entry, abs(entry - (1.0 - solution.R)))

    detail = f"{len(frequencies)} frequencies ({len(in_gap)} in gap), {len(reference.stack) - 1} interfaces"
    return [
        CheckResult(
            name="interface_continuity_density",
            passed=worst_rho < CONTINUITY_TOLERANCE,
            value=worst_rho,
            limit=CONTINUITY_TOLERANCE,
            detail=detail,
        ),
        CheckResult(
            name="interface_continuity_current",
            passed=worst_current < CONTINUITY_TOLERANCE,
            value=worst_current,
            limit=CONTINUITY_TOLERANCE,
            detail=detail,
        ),
        CheckResult(
            name="exit_current_equals_T",
            passed=worst_exit < FLUX_TOLERANCE,
            value=worst_exit,
            limit=FLUX_TOLERANCE,
            detail=detail,
        ),
        CheckResult(
            name="entry_current_equals_1_minus_R",
            passed=worst_entry < FLUX_TOLERANCE,
            value=worst_entry,
            limit=FLUX_TOLERANCE,
            detail=detail,
        ),
    ]


def check_tunnel(reference: ReferenceCrystal) -> list[CheckResult]:
    """Envelope decay through the crystal at the gap center."""
    profile = reference.gap_profile
    length = decay_length(profile, reference.stack)
    _, peaks = envelope(profile, reference.stack)
    ratio = float(peaks[-1] / peaks[0])
    return [
        CheckResult(
            name="tunnel_decay_length",
            passed=length is not None and math.isfinite(length) and length > 0.0,
            value=length,
            omega=reference.gap_center,
            detail="nm, least-squares fit of ln(per-period max rho)",
        ),
        CheckResult(
            name="tunnel_envelope_ratio",
            passed=ratio < TUNNEL_RATIO,
            value=ratio,
            limit=TUNNEL_RATIO,
            omega=reference.gap_center,
            detail=f"exit/entry envelope, T={profile.T:.3e}",
        ),
    ]


def check_contrast(reference: ReferenceCrystal) -> CheckResult:
    """Peak density at the resonance against the gap center."""
    resonance_peak = amplitude_stats(reference.resonance_profile).peak
    gap_peak = amplitude_stats(reference.gap_profile).peak
    ratio = resonance_peak / gap_peak
    return CheckResult(
        name="resonance_gap_contrast",
        passed=ratio >= AMPLITUDE_CONTRAST,
        value=ratio,
        limit=AMPLITUDE_CONTRAST,
        omega=reference.resonance_omega,
        detail=(
            f"peak rho {resonance_peak:.6g} at T={reference.resonance_T:.9f} vs "
            f"{gap_peak:.6g} at gap center {reference.gap_center:.9e}"
        ),
    )


def angle_resonance_peaks(
    side: str,
    samples: int,
    threads: int | None = None,
) -> dict[float, tuple[float, float]]:
    """Peak ρ of the reference crystal at its own edge resonance for every study angle.

    Each angle gets its own scan around its phase-π frequency, since the gap
    moves up with θ. Returns theta -> (resonance omega, peak rho).
    Raises LookupError when an angle shows no gap or no resonance on that side.
    """
    stack = reference_stack()
    peaks = {}
    for theta in STUDY_ANGLES:
        center = gap_center_omega(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM, theta)
        spectrum = sweep_frequency(
            stack, theta, REFERENCE_SCAN[0] * center, REFERENCE_SCAN[1] * center, samples, threads=threads
        )
        gap = next(
            (g for g in find_band_gaps(spectrum, DEFAULT_GAP_THRESHOLD) if g.omega_lo <= center <= g.omega_hi),
            None,
        )
        if gap is None:
            raise LookupError(f"no gap contains the phase-pi frequency {center:.9e} rad/s at theta={theta:.6f}")
        resonance = find_resonance(stack, theta, spectrum, gap, side=side)
        if resonance is None:
            raise LookupError(f"no {side} resonance at theta={theta:.6f}")
        peaks[theta] = (resonance.omega, _peak(stack, resonance.omega, theta))
    return peaks


def check_monotonicity(reference: ReferenceCrystal, threads: int | None = None) -> list[CheckResult]:
    """Period-number and mirror comparisons at the recorded resonance, angle ordering at per-angle resonances."""
    omega = reference.resonance_omega

    peaks = {periods: _peak(reference_stack(periods), omega) for periods in (8, 9, 10)}
    period_check = CheckResult(
        name="peak_increases_with_periods",
        passed=peaks[10] > peaks[9] > peaks[8],
        value=peaks[10],
        omega=omega,
        detail=", ".join(f"N={n}: {p:.6g}" for n, p in peaks.items()),
    )

    mirror = make_mirror_stack(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM, DEFAULT_PERIODS // 2)
    mirror_mean = amplitude_stats(sample_profile(mirror, 0.0, omega)).mean
    periodic_mean = amplitude_stats(reference.resonance_profile).mean
    mirror_check = CheckResult(
        name="mirror_mean_below_periodic",
        passed=mirror_mean < periodic_mean,
        value=mirror_mean,
        limit=periodic_mean,
        omega=omega,
        detail="mean rho of (AB)^5(BA)^5 vs (AB)^10",
    )

    try:
        angle_peaks = angle_resonance_peaks(reference.resonance_side, len(reference.spectrum), threads)
    except LookupError as e:
        angle_check = CheckResult(name="peak_increases_with_angle", passed=False, detail=str(e))
    else:
        ordered = [angle_peaks[theta] for theta in STUDY_ANGLES]
        angle_check = CheckResult(
            name="peak_increases_with_angle",
            passed=ordered[2][1] > ordered[1][1] > ordered[0][1],
            value=ordered[2][1],
            limit=ordered[1][1],
            omega=ordered[2][0],
            detail=", ".join(
                f"theta={theta:.6f}: peak {p:.6g} at omega={w:.9e}" for theta, (w, p) in angle_peaks.items()
            ) + f" ({reference.resonance_side} edge)",
        )
    return [period_check, mirror_check, angle_check]


def check_reference_frequencies(samples: int, threads: int | None = None) -> tuple[CheckResult, list[Observation]]:
    """Scan the reference crystal under both readings of the central frequency."""
    stack = reference_stack()
    incident = default_incident_state().amplitude
    observations = []
    any_gap = any_transparent = False
    for label, omega0 in (("angular", OMEGA0_ANGULAR), ("numeric", OMEGA0_NUMERIC)):
        spectrum = sweep_frequency(
            stack, 0.0, DEFAULT_RATIO_MIN * omega0, DEFAULT_RATIO_MAX * omega0, samples, threads=threads
        )
        gaps = find_band_gaps(spectrum, DEFAULT_GAP_THRESHOLD)
        any_gap = any_gap or bool(gaps)
        any_transparent = any_transparent or bool(np.any(spectrum.T > 0.99))

        values = {
            f"T({ratio}w0)": solve_scatter(stack, 0.0, ratio * omega0, incident).T for ratio in REFERENCE_RATIOS
        }
        values["gaps"] = float(len(gaps))
        values["max_T"] = float(np.max(spectrum.T))
        observations.append(
            Observation(
                name=f"reference_points_{label}",
                omega=omega0,
                values=values,
                holds=bool(gaps),
                detail=f"w0 read as {label} frequency",
            )
        )

    check = CheckResult(
        name="reference_scan_structure",
        passed=any_gap and any_transparent,
        detail=f"gap found: {any_gap}, T > 0.99 found: {any_transparent}",
    )
    return check, observations


def check_config(config: RunConfig, threads: int | None = None) -> list[CheckResult]:
    """Oracle deviation and flux residual over the configured sweep."""
    stack = config.stack.build()
    omega0 = config.omega0
    spectrum = sweep_frequency(
        stack,
        config.incidence.theta_rad,
        config.sweep.omega_ratio_min * omega0,
        config.sweep.omega_ratio_max * omega0,
        config.sweep.samples,
        threads=threads,
    )
    flux = np.abs(spectrum.T + spectrum.R - 1.0)
    worst = int(np.argmax(flux))
    deviation = spectrum.max_oracle_deviation()
    return [
        CheckResult(
            name="config_oracle_deviation",
            passed=deviation < ORACLE_TOLERANCE,
            value=deviation,
            limit=ORACLE_TOLERANCE,
            omega=float(spectrum.omega[int(np.argmax(np.abs(spectrum.T - spectrum.T_classical)))]),
            detail=f"{len(spectrum)} samples of the configured sweep",
        ),
        CheckResult(
            name="config_flux_residual",
            passed=float(flux[worst]) < FLUX_TOLERANCE,
            value=float(flux[worst]),
            limit=FLUX_TOLERANCE,
            omega=float(spectrum.omega[worst]),
        ),
    ]


def _record(report: ValidationReport, checks: list[CheckResult]) -> None:
    for check in checks:
        if check.passed:
            logger.info(f"Check {check.name} passed (value={check.value})")
        else:
            logger.warning(f"Check {check.name} FAILED (value={check.value}, limit={check.limit})")
        report.checks.append(check)


def run_validation(config: RunConfig, settings: Settings | None = None) -> ValidationReport:
    """Run every check and observation; the report passes iff all checks pass."""
    settings = settings or get_settings()
    start = time.perf_counter()
    report = ValidationReport()
    rng = np.random.default_rng(settings.validation_seed)

    _record(report, check_config(config, settings.threads))
    _record(report, check_oracle_equivalence(random_cases(rng, settings.validation_cases)))
    _record(report, [check_quarter_wave()])

    try:
        reference = analyse_reference_crystal(settings.resonance_scan_samples, settings.threads)
    except LookupError as e:
        logger.warning(f"Reference crystal analysis failed: {e}")
        _record(report, [CheckResult(name="reference_first_gap", passed=False, detail=str(e))])
    else:
        _record(report, check_interfaces(reference))
        _record(report, check_tunnel(reference))
        _record(report, [check_contrast(reference)])
        _record(report, check_monotonicity(reference, settings.threads))

    _record(report, check_invariance(random_cases(rng, settings.invariance_cases), rng))

    check, observations = check_reference_frequencies(settings.resonance_scan_samples, settings.threads)
    _record(report, [check])
    report.observations.extend(observations)

    report.runtime_s = time.perf_counter() - start
    logger.info(f"Validation finished in {report.runtime_s:.2f} s: {'passed' if report.passed else 'failed'}")
    return report
