"""Run configuration ingestion."""
from __future__ import annotations

import json
from pathlib import Path

from pydantic import ValidationError

from photonic_tmm.errors import ConfigParseError, ConfigValidationError
from photonic_tmm.models import RunConfig


def parse_config(text: bytes | str) -> RunConfig:
    """Parse a UTF-8 JSON object into a validated RunConfig; missing fields take defaults."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ConfigParseError(f"configuration is not valid UTF-8: {e.reason}") from e

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigParseError(e.msg, line=e.lineno, column=e.colno) from e

    if not isinstance(data, dict):
        raise ConfigParseError(f"expected a JSON object, got {type(data).__name__}", line=1, column=1)

    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "config"
        raise ConfigValidationError(field, first["msg"]) from e


def load_config(path: Path) -> RunConfig:
    """Read and parse a configuration file."""
    return parse_config(Path(path).read_bytes())
