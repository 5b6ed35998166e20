"""
Report rendering (json / table / dot) and output to a file or stdout.

JSON output is deterministic: sorted keys, two-space indent, no wall time
unless it was requested.
"""
import json
import os
import sys

from core.errors import ParameterError
from metrics.logger import log_info

FORMATS = ("json", "table", "dot")


def _jsonable(value):
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if hasattr(value, "item"):
        return value.item()
    return str(value)


def render_json(report):
    return json.dumps(report, sort_keys=True, indent=2, default=_jsonable) + "\n"


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], rows)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        rows.append((prefix, f"[{len(value)} entries]"))
    else:
        rows.append((prefix, json.dumps(value, default=_jsonable)))


def render_table(report):
    """Two-column key/value listing; lists of records are summarized by length."""
    rows = []
    _flatten("", report, rows)
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def render(report, fmt="json", dot=None):
    """
    Render a report dict.

    Args:
        report (dict): JSON-ready report.
        fmt (str): One of FORMATS.
        dot (str): Pre-rendered DOT text, required for fmt="dot".

    Raises:
        ParameterError: for an unknown format or a command without a DOT view.
    """
    if fmt == "json":
        return render_json(report)
    if fmt == "table":
        return render_table(report)
    if fmt == "dot":
        if dot is None:
            raise ParameterError("this command has no DOT rendering; use --format json or table")
        return dot
    raise ParameterError(f"unknown format '{fmt}' (expected one of {', '.join(FORMATS)})")


def write_report(text, out=None):
    """
    Write rendered text to the path out, or to stdout when out is None or "-".

    Returns:
        str: where the report went.
    """
    if out in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return "stdout"
    folder = os.path.dirname(os.path.abspath(out))
    os.makedirs(folder, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)
    log_info(f"Report saved as: {out}")
    return out
