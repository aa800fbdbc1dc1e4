"""Matrix JSON: ``{"rows", "cols", "field", "entries"}`` with canonical scalar text."""

from __future__ import annotations

import json
from typing import Any

from ..errors import ParseError
from .fields import field_from_tag
from .matrix import ExactMatrix


def matrix_to_json(M: ExactMatrix) -> dict[str, Any]:
    return {
        "rows": M.nrows,
        "cols": M.ncols,
        "field": M.field.tag,
        "entries": M.tolist(),
    }


def matrix_from_json(obj: Any) -> ExactMatrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix JSON must be an object")
    missing = {"rows", "cols", "field", "entries"} - set(obj)
    if missing:
        raise ParseError(f"matrix JSON missing keys: {sorted(missing)}")
    field = field_from_tag(obj["field"])
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise ParseError("rows/cols must be non-negative integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"expected {rows} entry rows")
    parsed = []
    for r in entries:
        if not isinstance(r, list) or len(r) != cols:
            raise ParseError(f"expected {cols} entries per row")
        parsed.append(tuple(field.parse(x) for x in r))
    return ExactMatrix(tuple(parsed), field, _trusted=True, ncols=cols)


def dumps_matrix(M: ExactMatrix) -> str:
    return json.dumps(matrix_to_json(M), sort_keys=True)


def loads_matrix(text: str) -> ExactMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return matrix_from_json(obj)
