"""File output under the run directory."""
from __future__ import annotations

import json
import logging
from pathlib import Path

from photonic_tmm.errors import OutputWriteError

logger = logging.getLogger(__name__)


def get_output_dir(directory: str | Path) -> Path:
    """Get or create the output directory."""
    path = Path(directory)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputWriteError(path, e.strerror or str(e)) from e
    return path


def write_bytes(path: Path, data: bytes) -> Path:
    """Write a file, surfacing failures with the path."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
    except OSError as e:
        raise OutputWriteError(path, e.strerror or str(e)) from e
    logger.info(f"Wrote {path} ({len(data)} bytes)")
    return path


def save_json(path: Path, data) -> Path:
    """Save data as indented JSON."""
    return write_bytes(path, json.dumps(data, indent=2, default=str).encode("utf-8"))
