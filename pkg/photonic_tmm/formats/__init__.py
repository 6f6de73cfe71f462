"""Formats - configuration parsing, CSV tables, SVG plots and file output."""
from photonic_tmm.formats.config_loader import load_config, parse_config
from photonic_tmm.formats.persistence import get_output_dir, save_json, write_bytes
from photonic_tmm.formats.svg import render_svg
from photonic_tmm.formats.tables import (
    Table,
    decay_table,
    gaps_table,
    profile_table,
    read_csv,
    spectrum_table,
    write_csv,
)

__all__ = [
    "Table",
    "decay_table",
    "gaps_table",
    "get_output_dir",
    "load_config",
    "parse_config",
    "profile_table",
    "read_csv",
    "render_svg",
    "save_json",
    "spectrum_table",
    "write_bytes",
    "write_csv",
]
