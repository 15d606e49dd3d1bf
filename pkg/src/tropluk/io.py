"""Exact matrix documents and deterministic JSON reports.

A matrix document is JSON ``{"n": 3, "entries": [["0.6", ...], ...]}`` with
optional ``"labels"``, or a CSV file with one matrix row per line.  Entries
are parsed exactly; JSON numbers are read through their decimal text, never
through binary floats.
"""

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from decimal import Decimal

from .errors import DomainError, TroplukError
from .linalg import TropMatrix, TropVector
from .scalar import format_scalar, to_scalar

TOOL_VERSION = "tropluk 0.1.0"


class InputError(TroplukError, ValueError):
    """Malformed input; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


@dataclass(frozen=True)
class MatrixDocument:
    matrix: TropMatrix
    labels: tuple
    digest: str

    @property
    def n(self):
        return self.matrix.nrows


def _entry(value, line=None, column=None, where=""):
    if isinstance(value, (str, int, Decimal)) and not isinstance(value, bool):
        try:
            return to_scalar(value)
        except (DomainError, TypeError) as exc:
            raise InputError(f"{where}{exc}", line, column) from None
    raise InputError(f"{where}expected a decimal string, got {type(value).__name__}", line, column)


def _locate(text, needle_index):
    """Line and column of the character offset ``needle_index``."""
    before = text[:needle_index]
    line = before.count("\n") + 1
    return line, needle_index - (before.rfind("\n") + 1) + 1


def _parse_json(text):
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "entries" not in doc:
        raise InputError('expected an object with an "entries" array', 1, 1)
    rows = doc["entries"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError('"entries" must be an array of arrays', *_locate(text, text.find('"entries"')))
    n = doc.get("n", len(rows))
    if not isinstance(n, int) or isinstance(n, bool) or n != len(rows):
        raise InputError(f'"n" = {n!r} does not match {len(rows)} rows', *_locate(text, text.find('"n"')))
    matrix = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InputError(f"row {i + 1} has {len(row)} entries, expected {n}")
        matrix.append([_entry(v, where=f"entry ({i + 1}, {j + 1}): ") for j, v in enumerate(row)])
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
            raise InputError(f'"labels" must be {n} strings')
        labels = tuple(labels)
    return matrix, labels


def _parse_csv(text):
    matrix = []
    for line_no, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        matrix.append([_entry(cell, line_no, col) for col, cell in enumerate(row, start=1)])
    if not matrix:
        raise InputError("empty CSV matrix", 1, 1)
    n = len(matrix)
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise InputError(f"row {i + 1} has {len(row)} entries, expected {n}", i + 1, len(row))
    return matrix, None


def parse_matrix(data, name=""):
    """Parse a matrix document from bytes; the format is JSON unless ``name`` ends in .csv."""
    digest = "sha256:" + hashlib.sha256(data).hexdigest()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"input is not UTF-8: {exc.reason}") from None
    is_csv = name.lower().endswith(".csv") or not text.lstrip().startswith("{")
    rows, labels = (_parse_csv if is_csv else _parse_json)(text)
    return MatrixDocument(TropMatrix(rows), labels, digest)


def load_matrix(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix(data, str(path))


def parse_vector(text, n=None):
    """A comma-separated vector literal such as ``"1,0.8,0.7"``."""
    cells = [c.strip() for c in text.split(",")]
    if cells == [""]:
        cells = []
    values = [_entry(c, 1, k) for k, c in enumerate(cells, start=1)]
    if n is not None and len(values) != n:
        raise InputError(f"vector has {len(values)} entries, expected {n}")
    return TropVector(values)


def render(value):
    """Convert results to JSON-ready data with exact scalar strings."""
    if isinstance(value, TropVector):
        return value.to_strings()
    if isinstance(value, TropMatrix):
        return value.to_strings()
    if isinstance(value, dict):
        return {k: render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return value
    return format_scalar(value)


def report(command, digest, result):
    """The JSON report text; identical inputs give identical bytes."""
    doc = {
        "command": command,
        "input_digest": digest,
        "result": render(result),
        "tool_version": TOOL_VERSION,
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def pretty(command, result, indent=0):
    """Plain-text rendering of a report's result."""
    lines = [f"{command}:"] if indent == 0 else []
    pad = "  " * (indent + 1)
    for key in sorted(result):
        value = render(result[key])
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(pretty(command, result[key], indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            lines.append(f"{pad}{key}:")
            for item in value:
                if isinstance(item, dict):
                    lines.append(f"{pad}  -")
                    lines.extend(pretty(command, item, indent + 2))
                else:
                    lines.append(f"{pad}  {_flat(item)}")
        else:
            lines.append(f"{pad}{key}: {_flat(value)}")
    return lines if indent else "\n".join(lines) + "\n"


def _flat(value):
    if isinstance(value, list):
        return "(" + ", ".join(_flat(v) for v in value) + ")"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
