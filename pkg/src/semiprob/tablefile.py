"""Text formats.

Table file: a header line holding ``n``, then ``n`` rows of ``n``
whitespace-separated integers (row x lists x*0 ... x*(n-1)).  Partition
file: one line of ``n`` block labels.  Lines starting with ``#`` and blank
lines are ignored in both.
"""
from __future__ import annotations

from .core import FiniteSemigroup, from_table
from .errors import SemigroupError
from .relations import Partition


class ParseError(SemigroupError):
    kind = "ParseError"

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)

    def witness(self):
        return self.line


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", lineno) from None


def parse_table(text: str) -> FiniteSemigroup:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty table file")
    lineno, header = lines[0]
    head = _ints(header, lineno)
    if len(head) != 1 or head[0] < 1:
        raise ParseError("header must be a single positive order n", lineno)
    n = head[0]
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, found {len(body)}")
    rows = []
    for lineno, line in body:
        row = _ints(line, lineno)
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", lineno)
        rows.append(row)
    return from_table(n, rows)


def format_table(S: FiniteSemigroup) -> str:
    return f"{S.order}\n{S}\n"


def parse_partition(text: str) -> Partition:
    lines = list(_data_lines(text))
    if len(lines) != 1:
        raise ParseError(f"expected one line of block labels, found {len(lines)}")
    lineno, line = lines[0]
    return Partition.from_labels(_ints(line, lineno))


def format_partition(p: Partition) -> str:
    return " ".join(map(str, p.block_of)) + "\n"
