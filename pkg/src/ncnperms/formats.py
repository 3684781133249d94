"""Serialization of sequence tables: b-file, CSV, and JSON.

The b-file form is the plain-text sequence exchange format: one "index value"
pair per line, newline-terminated, no header.  All values are written as
exact decimal integer strings regardless of size.
"""

from __future__ import annotations

import json

from .core import ValidationError
from .recurrences import SequenceTable


def to_bfile(table: SequenceTable) -> str:
    return "".join(f"{n} {v}\n" for n, v in table.items())


def parse_bfile(text: str, name: str = "") -> SequenceTable:
    indices: list[int] = []
    values: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValidationError(f"b-file line {lineno} is not 'n value': {line!r}")
        indices.append(int(parts[0]))
        values.append(int(parts[1]))
    if not values:
        raise ValidationError("b-file holds no entries")
    first = indices[0]
    if indices != list(range(first, first + len(indices))):
        raise ValidationError("b-file indices must be consecutive")
    return SequenceTable(name, tuple(values), first_index=first)


def to_csv(table: SequenceTable) -> str:
    return "n,value\n" + "".join(f"{n},{v}\n" for n, v in table.items())


def parse_csv(text: str, name: str = "") -> SequenceTable:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != "n,value":
        raise ValidationError("CSV must start with the header 'n,value'")
    indices: list[int] = []
    values: list[int] = []
    for line in lines[1:]:
        n_text, _, v_text = line.partition(",")
        indices.append(int(n_text))
        values.append(int(v_text))
    if not values:
        raise ValidationError("CSV holds no rows")
    first = indices[0]
    if indices != list(range(first, first + len(indices))):
        raise ValidationError("CSV indices must be consecutive")
    return SequenceTable(name, tuple(values), first_index=first)


def to_json(table: SequenceTable) -> str:
    obj = {
        "name": table.name,
        "offset": table.first_index,
        "values": [str(v) for v in table.values],
    }
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def parse_json(text: str) -> SequenceTable:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad JSON table: {exc}") from exc
    try:
        return SequenceTable(
            str(obj["name"]),
            tuple(int(v) for v in obj["values"]),
            first_index=int(obj["offset"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"JSON table missing field: {exc}") from exc


EMITTERS = {"bfile": to_bfile, "csv": to_csv, "json": to_json}
EXTENSIONS = {"bfile": "txt", "csv": "csv", "json": "json"}
