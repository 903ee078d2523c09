"""Shared configuration for straight tools."""

import os
from pathlib import Path

# State files directory (benchmark history, charts)
STATE_DIR = Path.home() / ".straight"
BENCH_DB = STATE_DIR / "bench_history.db"
CHARTS_DIR = STATE_DIR / "charts"

# Resource caps; each can be overridden per run from the command line
DEFAULT_PATH_CAP = 10**6
DEFAULT_ORACLE_CAP = 200_000
DEFAULT_REWRITE_CAP = 10**7

DEFAULT_SEED = 0


def _read_threads() -> int:
    """Worker threads for rearrangement loops, from STRAIGHT_THREADS."""
    raw = os.environ.get("STRAIGHT_THREADS", "").strip()
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


THREADS = _read_threads()

# Version tag written at the top of every JSON document
JSON_FORMAT_VERSION = 1
