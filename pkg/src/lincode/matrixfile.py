"""Plain-text matrix and word files.

A matrix file starts with a ``q k n`` header followed by ``k`` rows of ``n``
integers. Blank lines and ``#`` comments are skipped anywhere.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence, TextIO

from lincode.gf import PrimeField
from lincode.linalg import FieldMatrix


class MatrixFileError(ValueError):
    pass


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((lineno, s))
    return out


def _ints(s: str, lineno: int, sep: str | None = None) -> list[int]:
    try:
        return [int(tok, 10) for tok in s.split(sep)]
    except ValueError:
        raise MatrixFileError(f"line {lineno}: expected base-10 integers, got {s!r}") from None


def parse_matrix(text: str) -> FieldMatrix:
    lines = _data_lines(text)
    if not lines:
        raise MatrixFileError("empty matrix file")
    lineno, header = lines[0]
    head = _ints(header, lineno)
    if len(head) != 3:
        raise MatrixFileError(f"line {lineno}: header must be 'q k n', got {header!r}")
    q, k, n = head
    try:
        field = PrimeField(q)
    except ValueError as exc:
        raise MatrixFileError(f"line {lineno}: {exc}") from None
    if k < 0 or n < 0:
        raise MatrixFileError(f"line {lineno}: negative dimension")
    body = lines[1:]
    if len(body) != k:
        raise MatrixFileError(f"expected {k} data rows, found {len(body)}")
    rows = []
    for lineno, s in body:
        row = _ints(s, lineno)
        if len(row) != n:
            raise MatrixFileError(f"line {lineno}: expected {n} entries, found {len(row)}")
        bad = [v for v in row if not 0 <= v < q]
        if bad:
            raise MatrixFileError(f"line {lineno}: entry {bad[0]} not in [0, {q})")
        rows.append(row)
    return FieldMatrix.from_rows(field, rows, cols=n)


def read_matrix(path: str | Path) -> FieldMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFileError(f"{path}: {exc.strerror}") from None
    return parse_matrix(text)


def format_matrix(m: FieldMatrix) -> str:
    lines = [f"{m.field.q} {m.rows} {m.cols}"]
    lines += [" ".join(str(v) for v in r) for r in m.data]
    return "\n".join(lines) + "\n"


def write_matrix(m: FieldMatrix, out: str | Path | TextIO) -> None:
    text = format_matrix(m)
    if hasattr(out, "write"):
        out.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def parse_word(arg: str, q: int, n: int) -> tuple[int, ...]:
    """Read a word from a file path or an inline comma-separated list."""
    p = Path(arg)
    if p.is_file():
        lines = _data_lines(p.read_text(encoding="utf-8"))
        values: list[int] = []
        for lineno, s in lines:
            values += _ints(s, lineno)
    else:
        values = _ints(arg.replace(",", " "), 0)
    if len(values) != n:
        raise MatrixFileError(f"word has {len(values)} entries, expected {n}")
    bad = [v for v in values if not 0 <= v < q]
    if bad:
        raise MatrixFileError(f"word entry {bad[0]} not in [0, {q})")
    return tuple(values)


def format_vector(v: Sequence[int]) -> str:
    return "[" + " ".join(str(x) for x in v) + "]"
