"""JSON encoding with exact numbers.

Integers beyond 2^53 become decimal strings, fractions become ``"a/b"``;
every top-level document carries ``"schema": 1``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

SCHEMA = 1
SAFE_INT = 2 ** 53


def encode(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < SAFE_INT else str(obj)
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return encode(obj.numerator)
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if hasattr(obj, "to_json"):
        return encode(obj.to_json())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def number(value: Any) -> Fraction:
    """Inverse of :func:`encode` for a single number."""
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"not an exact number: {value!r}")


def dumps(doc: dict) -> str:
    body = {"schema": SCHEMA}
    body.update(encode(doc))
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def dump(doc: dict, path: str | Path) -> None:
    Path(path).write_text(dumps(doc))


def load(path: str | Path) -> dict:
    doc = json.loads(Path(path).read_text())
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"{path}: unsupported schema {doc.get('schema')!r}")
    return doc
