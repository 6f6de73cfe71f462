"""Command dispatch: `photonic_tmm <command> --config <path> [--out <dir>] [--svg]`."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from photonic_tmm.config import Settings, get_settings
from photonic_tmm.constants import EXIT_IO, EXIT_OK, EXIT_PROPERTY_FAILURE, EXIT_USAGE
from photonic_tmm.errors import (
    ConfigError,
    DegenerateFitError,
    InvalidParameterError,
    OutputWriteError,
    PhotonicError,
)
from photonic_tmm.fields.observables import FieldProfile, sample_profile
from photonic_tmm.formats.config_loader import load_config
from photonic_tmm.formats.persistence import get_output_dir, save_json, write_bytes
from photonic_tmm.formats.svg import render_svg
from photonic_tmm.formats.tables import decay_table, gaps_table, profile_table, spectrum_table, write_csv
from photonic_tmm.models import Command, RunConfig
from photonic_tmm.spectra.analysis import decay_length
from photonic_tmm.spectra.sweep import GapInterval, Spectrum, find_band_gaps, sweep_frequency
from photonic_tmm.stack.layers import Stack
from photonic_tmm.validation import run_validation

logger = logging.getLogger(__name__)


def compute_spectrum(config: RunConfig) -> Spectrum:
    omega0 = config.omega0
    return sweep_frequency(
        config.stack.build(),
        config.incidence.theta_rad,
        config.sweep.omega_ratio_min * omega0,
        config.sweep.omega_ratio_max * omega0,
        config.sweep.samples,
    )


def compute_profile(config: RunConfig) -> FieldProfile:
    return sample_profile(
        config.stack.build(),
        config.incidence.theta_rad,
        config.profile.omega_ratio * config.omega0,
        samples=config.profile.samples,
        form=config.profile.current_form,
    )


def gap_decay_lengths(
    config: RunConfig,
    stack: Stack,
    gaps: list[GapInterval],
) -> list[tuple[GapInterval, float | None]]:
    """Decay length at the center of every gap; None where no decay can be fitted."""
    entries = []
    for gap in gaps:
        profile = sample_profile(
            stack, config.incidence.theta_rad, gap.omega_center, samples=config.profile.samples
        )
        try:
            length = decay_length(profile, stack)
        except DegenerateFitError as e:
            logger.warning(f"Skipping decay fit at omega={gap.omega_center:.6e}: {e}")
            length = None
        entries.append((gap, length))
    return entries


def _spectrum_svg(spectrum: Spectrum, omega0: float) -> bytes:
    ratio = spectrum.omega / omega0
    return render_svg(
        {"T quantum": (ratio, spectrum.T), "T classical": (ratio, spectrum.T_classical)},
        x_label="omega / omega0",
        y_label="transmissivity",
        title="Transmissivity",
    )


def _profile_svg(profile: FieldProfile) -> bytes:
    return render_svg(
        {"rho": (profile.x, profile.rho), "J/c": (profile.x, profile.j_over_c)},
        x_label="x (nm)",
        y_label="density / current",
        title=f"Profile at omega={profile.omega:.6e} rad/s",
    )


def run(config: RunConfig, command: Command, settings: Settings | None = None) -> int:
    """Execute one command, writing its files under the configured output directory."""
    settings = settings or get_settings()
    out = get_output_dir(config.output.directory)
    logger.info(f"Running {command.value} into {out}")

    if command is Command.SPECTRUM:
        spectrum = compute_spectrum(config)
        write_bytes(out / "spectrum.csv", write_csv(spectrum_table(spectrum, config.omega0)))
        if config.output.emit_svg:
            write_bytes(out / "spectrum.svg", _spectrum_svg(spectrum, config.omega0))
        return EXIT_OK

    if command is Command.PROFILE:
        profile = compute_profile(config)
        write_bytes(out / "profile.csv", write_csv(profile_table(profile)))
        if config.output.emit_svg:
            write_bytes(out / "profile.svg", _profile_svg(profile))
        return EXIT_OK

    if command is Command.BANDGAP:
        stack = config.stack.build()
        gaps = find_band_gaps(compute_spectrum(config), config.sweep.gap_threshold)
        logger.info(f"Found {len(gaps)} gap(s)")
        write_bytes(out / "gaps.csv", write_csv(gaps_table(gaps)))
        entries = gap_decay_lengths(config, stack, gaps)
        write_bytes(out / "decay.csv", write_csv(decay_table(entries, config.omega0)))
        return EXIT_OK

    report = run_validation(config, settings)
    save_json(out / "validation.json", report.model_dump(mode="json"))
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_PROPERTY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photonic_tmm",
        description="Quantum transfer-matrix simulator for 1D photonic crystals",
    )
    parser.add_argument("command", choices=[c.value for c in Command], help="What to compute")
    parser.add_argument("--config", type=Path, help="JSON run configuration (defaults if omitted)")
    parser.add_argument(
        "--out", type=Path, help="Output directory (overrides output.directory, then PHOTONIC_TMM_OUTPUT_DIR)"
    )
    parser.add_argument("--svg", action="store_true", help="Also write SVG plots")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    settings = get_settings()
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    try:
        config = load_config(args.config) if args.config else RunConfig()
        updates = {}
        if args.out is not None:
            updates["directory"] = str(args.out)
        elif "directory" not in config.output.model_fields_set:
            updates["directory"] = settings.output_dir
        if args.svg:
            updates["emit_svg"] = True
        if updates:
            config = config.model_copy(update={"output": config.output.model_copy(update=updates)})
        return run(config, Command(args.command), settings)
    except (ConfigError, InvalidParameterError) as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE
    except OutputWriteError as e:
        logger.error(f"Could not write output: {e}")
        return EXIT_IO
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_IO
    except PhotonicError as e:
        logger.error(f"Computation failed: {e}")
        return EXIT_PROPERTY_FAILURE


if __name__ == "__main__":
    sys.exit(main())
