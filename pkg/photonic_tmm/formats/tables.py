"""CSV tables for spectra, profiles, gaps and decay fits."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from photonic_tmm.constants import (
    CSV_SIGNIFICANT_DIGITS,
    DECAY_HEADER,
    GAPS_HEADER,
    PROFILE_HEADER,
    SPECTRUM_HEADER,
)
from photonic_tmm.fields.observables import FieldProfile
from photonic_tmm.spectra.sweep import GapInterval, Spectrum


@dataclass
class Table:
    """Header plus rows of floats; None renders as an empty cell."""
    header: tuple[str, ...]
    rows: list[tuple[float | None, ...]] = field(default_factory=list)

    def column(self, name: str) -> list[float | None]:
        index = self.header.index(name)
        return [row[index] for row in self.rows]


def _format(value: float | None) -> str:
    if value is None:
        return ""
    return f"{value:.{CSV_SIGNIFICANT_DIGITS}g}"


def write_csv(table: Table) -> bytes:
    """Comma-separated, LF line endings, 12 significant digits."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.header)
    writer.writerows([_format(value) for value in row] for row in table.rows)
    return buffer.getvalue().encode("utf-8")


def read_csv(data: bytes) -> Table:
    """Inverse of write_csv."""
    reader = csv.reader(io.StringIO(data.decode("utf-8")))
    header = tuple(next(reader))
    rows = [tuple(float(cell) if cell else None for cell in row) for row in reader if row]
    return Table(header=header, rows=rows)


def spectrum_table(spectrum: Spectrum, omega0: float) -> Table:
    rows = [
        (float(w), float(w / omega0), float(T), float(R), float(Tc))
        for w, T, R, Tc in zip(spectrum.omega, spectrum.T, spectrum.R, spectrum.T_classical)
    ]
    return Table(header=SPECTRUM_HEADER, rows=rows)


def profile_table(profile: FieldProfile) -> Table:
    rows = [(float(x), float(rho), float(j)) for x, rho, j in zip(profile.x, profile.rho, profile.j_over_c)]
    return Table(header=PROFILE_HEADER, rows=rows)


def gaps_table(gaps: list[GapInterval]) -> Table:
    return Table(header=GAPS_HEADER, rows=[(g.omega_lo, g.omega_hi, g.min_T) for g in gaps])


def decay_table(entries: list[tuple[GapInterval, float | None]], omega0: float) -> Table:
    rows = [(g.omega_center, g.omega_center / omega0, g.min_T, length) for g, length in entries]
    return Table(header=DECAY_HEADER, rows=rows)
