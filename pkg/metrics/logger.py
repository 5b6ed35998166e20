"""
Logging utilities for progress and info.

Every line goes to stderr so that stdout only carries the report.
"""
import sys

from tqdm import tqdm

_STATE = {"quiet": False, "verbose": False}


def set_verbosity(quiet=False, verbose=False):
    """Silence [INFO] lines and progress bars, or enable [DEBUG] lines."""
    _STATE["quiet"] = bool(quiet)
    _STATE["verbose"] = bool(verbose)


def _emit(prefix, msg):
    print(prefix, msg, file=sys.stderr)


def log_info(msg):
    """Log informational messages."""
    if not _STATE["quiet"]:
        _emit("[INFO]", msg)


def log_warn(msg):
    """Log warning messages."""
    _emit("[WARN]", msg)


def log_error(msg):
    """Log error messages."""
    _emit("[ERROR]", msg)


def log_debug(msg):
    if _STATE["verbose"]:
        _emit("[DEBUG]", msg)


def progress(iterable=None, total=None, desc=None, unit="it"):
    """tqdm progress bar on stderr, disabled when quiet."""
    return tqdm(iterable, total=total, desc=desc, unit=unit, file=sys.stderr,
                disable=_STATE["quiet"], leave=False)
