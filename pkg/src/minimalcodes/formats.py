"""Plain-text generator-matrix and function-table files.

Generator file::

    q n k
    <n residues>      (k lines)

Function file::

    p m
    <p^m residues in point-index order>

Both end with a newline and carry no comments.
"""
from __future__ import annotations

from pathlib import Path

from minimalcodes.field import LinearCode
from minimalcodes.ternary import FieldFunction


class FormatError(ValueError):
    pass


def _lines(text: str, what: str) -> list[list[int]]:
    if not text.endswith("\n"):
        raise FormatError(f"{what}: missing trailing newline")
    try:
        return [[int(tok) for tok in line.split()] for line in text[:-1].split("\n")]
    except ValueError as exc:
        raise FormatError(f"{what}: non-integer token ({exc})") from None


def format_generator(code: LinearCode) -> str:
    out = [f"{code.q} {code.n} {code.k}"]
    out += [" ".join(map(str, row)) for row in code.generator]
    return "\n".join(out) + "\n"


def parse_generator(text: str) -> LinearCode:
    lines = _lines(text, "generator file")
    if len(lines[0]) != 3:
        raise FormatError("generator header must be 'q n k'")
    q, n, k = lines[0]
    rows = lines[1:]
    if len(rows) != k:
        raise FormatError(f"expected {k} generator rows, found {len(rows)}")
    for i, row in enumerate(rows, start=2):
        if len(row) != n:
            raise FormatError(f"line {i}: expected {n} entries, found {len(row)}")
        if any(e < 0 or e >= q for e in row):
            raise FormatError(f"line {i}: entries must lie in [0, {q})")
    return LinearCode.from_rows(q, rows)


def format_function(f: FieldFunction) -> str:
    return f"{f.p} {f.m}\n" + " ".join(map(str, f.values)) + "\n"


def parse_function(text: str) -> FieldFunction:
    lines = _lines(text, "function file")
    if len(lines) != 2 or len(lines[0]) != 2:
        raise FormatError("function file must be a 'p m' header and one value line")
    (p, m), values = lines
    if any(v < 0 or v >= p for v in values):
        raise FormatError(f"values must lie in [0, {p})")
    return FieldFunction(p, m, tuple(values))


def read_generator(path: str | Path) -> LinearCode:
    return parse_generator(Path(path).read_text())


def write_generator(code: LinearCode, path: str | Path) -> None:
    Path(path).write_text(format_generator(code))


def read_function(path: str | Path) -> FieldFunction:
    return parse_function(Path(path).read_text())


def write_function(f: FieldFunction, path: str | Path) -> None:
    Path(path).write_text(format_function(f))
