"""Shared utilities for straight tools."""

import sys
from datetime import datetime
from pathlib import Path
from typing import Tuple, Union

from .errors import ValidationError


def timestamp() -> str:
    """Return current time formatted for logging."""
    return datetime.now().strftime("%H:%M:%S")


def log(message: str):
    """Print a timestamped progress line to stderr."""
    print(f"[{timestamp()}] {message}", file=sys.stderr)


def parse_int_list(raw: str, what: str = "list") -> Tuple[int, ...]:
    """Parse ``"4,3,2"`` into ``(4, 3, 2)``."""
    try:
        return tuple(int(chunk.strip()) for chunk in raw.split(",") if chunk.strip())
    except ValueError as exc:
        raise ValidationError(f"Invalid {what}: {raw!r}") from exc


def read_text(source: Union[str, Path]) -> str:
    """Read a file, or stdin when the source is ``-``."""
    name = "stdin" if str(source) == "-" else str(source)
    try:
        if str(source) == "-":
            return sys.stdin.read()
        return Path(source).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ValidationError(f"{name} is not valid UTF-8: {exc}") from exc
    except OSError as exc:
        raise ValidationError(f"Cannot read {name}: {exc}") from exc


def format_coeff(coeff: int) -> str:
    """Signed coefficient as printed in combinations: ``+1``, ``−2``."""
    return f"+{coeff}" if coeff >= 0 else f"−{-coeff}"
