"""Canonical JSON writer: identical input data gives identical bytes.

Floats are rendered with 12 significant digits, negative zero is
normalized, and containers are emitted in their own (deterministic)
order.  Non-finite floats are rejected: reports must not contain them.
"""

from __future__ import annotations

import json
import math

import numpy as np


def _format_float(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        raise ValueError("non-finite float in report")
    if v == 0.0:
        v = 0.0
    return format(v, ".12g")


def _write(obj, out: list[str], indent: int | None, depth: int):
    if obj is None:
        out.append("null")
    elif isinstance(obj, (bool, np.bool_)):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_format_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, np.ndarray):
        _write(obj.tolist(), out, indent, depth)
    elif isinstance(obj, dict):
        _write_items(
            ((json.dumps(str(k), ensure_ascii=False) + (": " if indent else ":"))
             for k in obj),
            obj.values(), "{", "}", out, indent, depth)
    elif isinstance(obj, (list, tuple)):
        _write_items(("" for _ in obj), obj, "[", "]", out, indent, depth)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write_items(prefixes, values, open_ch, close_ch, out, indent, depth):
    values = list(values)
    if not values:
        out.append(open_ch + close_ch)
        return
    out.append(open_ch)
    pad = "\n" + " " * (indent * (depth + 1)) if indent else ""
    closing = "\n" + " " * (indent * depth) if indent else ""
    first = True
    for prefix, value in zip(prefixes, values):
        out.append(("," if not first else "") + pad + prefix)
        _write(value, out, indent, depth + 1)
        first = False
    out.append(closing + close_ch)


def canonical_dumps(obj, indent: int | None = 2) -> str:
    out: list[str] = []
    _write(obj, out, indent, 0)
    return "".join(out) + "\n"
