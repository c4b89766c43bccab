from __future__ import annotations

import csv
import io
import json
from enum import Enum, auto
from typing import Any, Sequence


class OutputFormat(Enum):
    """
    The ways command results can be printed.
    """

    JSON = auto(), "json"
    TABLE = auto(), "table"
    CSV = auto(), "csv"

    def __new__(cls, *args, **kwargs):
        obj = object.__new__(cls)
        obj._value_ = args[0]
        return obj

    def __init__(self, _: int, label: str = ""):
        self._label = label

    def __str__(self):
        return self._label

    @property
    def label(self) -> str:
        return self._label

    @staticmethod
    def from_label(label: str) -> OutputFormat:
        for member in OutputFormat:
            if member.label == label:
                return member
        raise ValueError(f"Unknown output format {label!r}")


def format_cell(value: Any) -> str:
    """
    Prints one table cell: None as a dash, floats with four decimals,
    strings through repr when they hold control characters.
    """
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.4f}"
    text = str(value)
    if any(not char.isprintable() for char in text):
        return repr(text)
    return text


def render_table(rows: Sequence[dict], columns: Sequence[str]) -> str:
    """
    Lays rows out as an aligned plain-text table with a header.

    :param rows: the rows, keyed by column name
    :param columns: the columns to show, in order
    :return: the table
    """
    cells = [[format_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max([len(column)] + [len(line[index]) for line in cells]) for index, column in enumerate(columns)]
    lines = ["  ".join(column.ljust(width) for column, width in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * width for width in widths))
    for line in cells:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
    return "\n".join(lines)


def render_csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: "" if row.get(column) is None else row.get(column) for column in columns})
    return buffer.getvalue().rstrip("\n")


def render_json(document: Any) -> str:
    return json.dumps(document, indent=2)


def render(rows: Sequence[dict], columns: Sequence[str], output_format: OutputFormat, document: Any = None) -> str:
    """
    Renders a command result.

    :param rows: the tabular view of the result
    :param columns: the columns of the tabular view
    :param output_format: the format to print
    :param document: the full result for JSON output, the rows when omitted
    :return: the text to print
    """
    if output_format == OutputFormat.JSON:
        return render_json(document if document is not None else list(rows))
    if output_format == OutputFormat.CSV:
        return render_csv(rows, columns)
    return render_table(rows, columns)
