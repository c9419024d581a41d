"""
Helper functions and utilities
"""
import math
import sys

import numpy as np

from config import CSV_DIGITS, VERBOSE
from utils.errors import DomainError

_state = {"verbose": VERBOSE}


def set_verbose(flag):
    """Toggle status lines at runtime (the CLI --verbose flag)"""
    _state["verbose"] = bool(flag)


def log_status(message):
    """Print an indented status line to stderr when verbose"""
    if _state["verbose"]:
        print(f"  {message}", file=sys.stderr)


def require_finite(name, *values):
    """Raise DomainError unless every value is finite"""
    for value in values:
        if not np.all(np.isfinite(value)):
            raise DomainError(f"❌ {name} must be finite, got {value!r}")


def uniform_grid(start, stop, num):
    """Uniform grid inclusive of both endpoints.

    Nodes are (start * (num - 1 - i) + stop * i) / (num - 1); on a window
    with start == -stop node i is the exact negation of node num - 1 - i.
    """
    if num < 2:
        raise DomainError(f"❌ Grid needs at least 2 points, got {num}")
    index = np.arange(num, dtype=float)
    grid = (start * index[::-1] + stop * index) / (num - 1)
    grid[0] = start
    grid[-1] = stop
    return grid


def parse_float_list(raw):
    """Parse '0,0.1,0.5,1' into [0.0, 0.1, 0.5, 1.0]"""
    try:
        values = [float(v) for v in raw.split(",") if v.strip()]
    except ValueError:
        raise DomainError(f"❌ Not a comma-separated list of numbers: {raw!r}")
    if not values:
        raise DomainError("❌ Number list is empty")
    return values


def format_number(value, digits=CSV_DIGITS):
    """Locale-independent decimal with `digits` significant digits"""
    value = float(value)
    if value == 0.0 and math.copysign(1.0, value) < 0:
        value = 0.0
    return f"{value:.{digits}g}"


def float_format(digits=CSV_DIGITS):
    """printf-style format pandas uses for CSV floats"""
    return f"%.{digits}g"
