#!/usr/bin/env python3
"""Regenerate the density profile series of the angle, period, structure and frequency studies."""
import argparse
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from photonic_tmm.constants import (
    DEFAULT_A_NM,
    DEFAULT_B_NM,
    DEFAULT_N_A,
    DEFAULT_N_B,
    DEFAULT_PERIODS,
    DEFAULT_PROFILE_RATIO,
    OMEGA0_ANGULAR,
    OMEGA0_NUMERIC,
    PROFILE_HEADER,
    REFERENCE_RATIOS,
    STUDY_ANGLES,
)
from photonic_tmm.fields.observables import FieldProfile, sample_profile
from photonic_tmm.formats.persistence import get_output_dir, write_bytes
from photonic_tmm.formats.svg import render_svg
from photonic_tmm.formats.tables import profile_table, write_csv
from photonic_tmm.spectra.analysis import amplitude_stats
from photonic_tmm.stack.layers import Stack, make_mirror_stack, make_periodic_stack

logger = logging.getLogger("parameter_studies")

STUDIES = ("angle", "periods", "structure", "frequency")


def periodic(periods: int = DEFAULT_PERIODS) -> Stack:
    return make_periodic_stack(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM, periods)


def study_series(study: str, omega: float, omega0: float) -> dict[str, FieldProfile]:
    """Labelled profiles of one study."""
    if study == "angle":
        return {f"theta={theta:.4f}": sample_profile(periodic(), theta, omega) for theta in STUDY_ANGLES}
    if study == "periods":
        return {f"N={n}": sample_profile(periodic(n), 0.0, omega) for n in (8, 9, 10)}
    if study == "structure":
        mirror = make_mirror_stack(DEFAULT_N_A, DEFAULT_N_B, DEFAULT_A_NM, DEFAULT_B_NM, DEFAULT_PERIODS // 2)
        return {
            "(AB)^10": sample_profile(periodic(), 0.0, omega),
            "(AB)^5(BA)^5": sample_profile(mirror, 0.0, omega),
        }
    return {f"w/w0={ratio}": sample_profile(periodic(), 0.0, ratio * omega0) for ratio in REFERENCE_RATIOS}


def write_study(study: str, series: dict[str, FieldProfile], out: Path) -> None:
    for index, (label, profile) in enumerate(series.items()):
        stats = amplitude_stats(profile)
        print(f"  {study:9} {label:16} T={profile.T:.6f} peak={stats.peak:.6g} mean={stats.mean:.6g}")
        write_bytes(out / f"{study}_{index}.csv", write_csv(profile_table(profile)))

    svg = render_svg(
        {label: (profile.x, profile.rho) for label, profile in series.items()},
        x_label=PROFILE_HEADER[0],
        y_label=PROFILE_HEADER[1],
        title=f"{study} study",
    )
    write_bytes(out / f"{study}.svg", svg)


def main():
    parser = argparse.ArgumentParser(
        description="Density profiles of the parameter studies as CSV and SVG",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # All studies at 1.25 w0 (angular reading of w0)
  python parameter_studies.py

  # Only the angle study at 0.9 w0, numeric reading of w0
  python parameter_studies.py --study angle --omega-ratio 0.9 --numeric
"""
    )
    parser.add_argument("--study", choices=STUDIES, action="append", help="Study to run (repeatable)")
    parser.add_argument("--omega-ratio", type=float, default=DEFAULT_PROFILE_RATIO, help="Frequency in units of w0")
    parser.add_argument("--numeric", action="store_true", help="Read w0 = 171e12 rad/s instead of 2*pi*171 THz")
    parser.add_argument("--out", type=Path, default=Path("output/studies"), help="Output directory")
    args = parser.parse_args()

    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    omega0 = OMEGA0_NUMERIC if args.numeric else OMEGA0_ANGULAR
    omega = args.omega_ratio * omega0
    out = get_output_dir(args.out)
    print(f"Parameter studies at omega={omega:.6e} rad/s into {out}")

    for study in args.study or STUDIES:
        write_study(study, study_series(study, omega, omega0), out)


if __name__ == "__main__":
    main()
