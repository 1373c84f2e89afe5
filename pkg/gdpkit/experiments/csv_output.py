"""
Deterministic CSV tables: header row, numbers in fixed 12 digit scientific notation, LF line endings,
optional '#' comment lines before the header and after the last row.
"""

__version__ = '1.0'
__all__ = [
    'format_value', 'render_table', 'write_text', 'parse_table', 'table_columns', 'Table'
]

__author__ = 'GDPKIT'

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Mapping, Optional, Sequence
import csv
import io
import sys


def format_value(value) -> str:
    return "{:.12e}".format(value)


@dataclass
class Table:
    '''
    Attributes:
        columns : List[str]
            Header of the table.
        rows : List[Mapping[str, float]]
            One mapping per row, keyed by column.
        leading : List[str]
            Comment lines before the header, without the '#'.
        trailing : List[str]
            Comment lines after the last row, without the '#'.
    '''
    columns: List[str]
    rows: List[Mapping[str, float]] = field(default_factory=list)
    leading: List[str] = field(default_factory=list)
    trailing: List[str] = field(default_factory=list)

    def column(self, name: str) -> List[float]:
        return [row[name] for row in self.rows]


def render_table(table: Table) -> str:
    '''
    Returns:
        The table as text, every line terminated by a single LF.
    '''
    buffer = io.StringIO()
    for comment in table.leading:
        buffer.write("#{}\n".format(comment))
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(row[name]) for name in table.columns])
    for comment in table.trailing:
        buffer.write("#{}\n".format(comment))
    return buffer.getvalue()


def write_text(text: str, path: Optional[str] = None):
    '''
    Writes text to a file, or to stdout when path is None.

    Raises:
        OSError
            If the file cannot be written.
    '''
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    if target.parent != Path("."):
        target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", newline="") as out_file:
        out_file.write(text)


def parse_table(text: str) -> Table:
    '''
    Reads back a table produced by render_table.

    Raises:
        ValueError
            If the header is missing or a row has the wrong number of fields.
    '''
    leading, trailing, data_lines = [], [], []
    for line in text.split("\n"):
        if not line:
            continue
        if line.startswith("#"):
            (trailing if data_lines else leading).append(line[1:])
        else:
            data_lines.append(line)
    if not data_lines:
        raise ValueError("table has no header")
    reader = csv.reader(data_lines)
    columns = next(reader)
    rows = []
    for number, values in enumerate(reader, start=2):
        if len(values) != len(columns):
            raise ValueError("row {} has {} fields, header has {}".format(number, len(values), len(columns)))
        rows.append({name: float(value) for name, value in zip(columns, values)})
    return Table(columns, rows, leading, trailing)


def table_columns(base: Sequence[str], channels: Sequence[str]) -> List[str]:
    '''
    Keeps the columns of the requested channels: a column naming "gdp" or "dp" is kept only if
    every channel it names is requested.
    '''
    kept = []
    for name in base:
        parts = name.split("_")
        named = [part for part in parts if part in ("gdp", "dp")]
        if all(part in channels for part in named):
            kept.append(name)
    return kept
