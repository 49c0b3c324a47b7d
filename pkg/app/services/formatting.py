"""Serializers for CLI output: json, csv (header row, no quoting) and plain text tables."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, List, Sequence

from pydantic import BaseModel

FORMATS = ("json", "csv", "text")


def to_jsonable(data: Any) -> Any:
    if isinstance(data, BaseModel):
        return data.model_dump(mode="json", by_alias=True)
    if isinstance(data, (list, tuple)):
        return [to_jsonable(item) for item in data]
    if isinstance(data, dict):
        return {key: to_jsonable(value) for key, value in data.items()}
    return data


def render_json(data: Any) -> str:
    return json.dumps(to_jsonable(data), ensure_ascii=False, indent=2)


def render_csv(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n", quoting=csv.QUOTE_NONE, escapechar="\\")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(["" if cell is None else cell for cell in row])
    return buffer.getvalue().rstrip("\n")


def render_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Format a simple table with padded columns."""
    rows_list: List[List[str]] = [["" if cell is None else str(cell) for cell in row] for row in rows]
    widths = [len(str(h)) for h in headers]
    for row in rows_list:
        for idx, cell in enumerate(row):
            widths[idx] = max(widths[idx], len(cell))
    header_line = "  ".join(str(h).ljust(widths[i]) for i, h in enumerate(headers)).rstrip()
    separator = "-" * len(header_line)
    body_lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows_list]
    return "\n".join([header_line, separator] + body_lines)


def seq_cell(entries: Iterable[int]) -> str:
    return " ".join(map(str, entries))


def render(fmt: str, data: Any, headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """`data` feeds the json form, `headers`/`rows` the csv and text forms."""
    if fmt == "json":
        return render_json(data)
    if fmt == "csv":
        return render_csv(headers, rows)
    return render_table(headers, rows)
