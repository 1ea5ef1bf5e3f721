"""JSON structure files.

Schema: {"order": n, "add": [[...]], "mul": [[...]],
         "labels": [...]?, "meta": {...}?}

with 0-based element indices, index 0 the ∘-identity, and labels purely
presentational.  Serialization is canonical (sorted keys, two-space
indent, trailing newline) so identical structures produce identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FileFormatError


@dataclass(frozen=True)
class StructureFile:
    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    meta: dict = field(default_factory=dict)


def _check_matrix(m, n, what):
    if not isinstance(m, list) or len(m) != n:
        raise FileFormatError(f"{what} must be an {n}x{n} matrix")
    for row in m:
        if not isinstance(row, list) or len(row) != n:
            raise FileFormatError(f"{what} must be an {n}x{n} matrix")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise FileFormatError(f"{what} entries must be integers in [0,{n})")
    return tuple(tuple(row) for row in m)


def parse_structure(text: str) -> StructureFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FileFormatError("top level must be an object")
    try:
        n = data["order"]
        add_raw = data["add"]
        mul_raw = data["mul"]
    except KeyError as exc:
        raise FileFormatError(f"missing required key {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FileFormatError("order must be a positive integer")
    add = _check_matrix(add_raw, n, "add")
    mul = _check_matrix(mul_raw, n, "mul")
    labels = data.get("labels")
    if labels is not None:
        if (
            not isinstance(labels, list)
            or len(labels) != n
            or any(not isinstance(x, str) for x in labels)
            or len(set(labels)) != n
        ):
            raise FileFormatError("labels must be n unique strings")
        labels = tuple(labels)
    meta = data.get("meta", {})
    if not isinstance(meta, dict):
        raise FileFormatError("meta must be an object")
    return StructureFile(n, add, mul, labels, meta)


def load_structure(path) -> StructureFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    return parse_structure(text)


def dump_json(obj) -> str:
    """Canonical JSON used for every report and structure file."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def structure_to_json(sf: StructureFile) -> str:
    obj = {
        "order": sf.order,
        "add": [list(row) for row in sf.add],
        "mul": [list(row) for row in sf.mul],
    }
    if sf.labels is not None:
        obj["labels"] = list(sf.labels)
    if sf.meta:
        obj["meta"] = sf.meta
    return dump_json(obj)


def save_structure(sf: StructureFile, path) -> None:
    Path(path).write_text(structure_to_json(sf), encoding="utf-8")


def structure_of(B) -> StructureFile:
    """Snapshot a validated semi-brace as a file record."""
    return StructureFile(B.n, B.add, B.mul, B.labels)
