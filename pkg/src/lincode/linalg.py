"""Dense exact linear algebra over a prime field.

Matrices hold plain reduced ints internally; ``FieldMatrix.element`` wraps
an entry as a :class:`~lincode.gf.FieldElement` when the typed view is wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from lincode.errors import FieldMismatchError, ShapeError
from lincode.gf import FieldElement, PrimeField

Vector = tuple[int, ...]


@dataclass(frozen=True)
class FieldMatrix:
    field: PrimeField
    rows: int
    cols: int
    data: tuple[Vector, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ShapeError(f"data does not match shape {self.rows}x{self.cols}")
        q = self.field.q
        for r in self.data:
            for v in r:
                if not 0 <= v < q:
                    raise ValueError(f"entry {v} not reduced modulo {q}")

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Iterable[Iterable[int]], cols: int | None = None) -> FieldMatrix:
        """Build a matrix, reducing every entry modulo q.

        ``cols`` is required when there are no rows.
        """
        q = field.q
        data = tuple(tuple(int(v) % q for v in r) for r in rows)
        if cols is None:
            if not data:
                raise ShapeError("cols must be given for a matrix with no rows")
            cols = len(data[0])
        return cls(field, len(data), cols, data)

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> FieldMatrix:
        return cls(field, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: PrimeField, size: int) -> FieldMatrix:
        return cls(field, size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.data[i][j], self.field)

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def __str__(self):
        return "\n".join("[" + " ".join(str(v) for v in r) + "]" for r in self.data)


@dataclass(frozen=True)
class EchelonResult:
    echelon: FieldMatrix
    rank: int
    pivot_cols: tuple[int, ...]


def _require_same_field(a: PrimeField, b: PrimeField) -> None:
    if a != b:
        raise FieldMismatchError(f"{a!r} vs {b!r}")


def _eliminate(m: FieldMatrix, reduced: bool) -> tuple[list[list[int]], list[int]]:
    q = m.field.q
    work = [list(r) for r in m.data]
    pivots: list[int] = []
    prow = 0
    for col in range(m.cols):
        if prow == m.rows:
            break
        found = -1
        for r in range(prow, m.rows):
            if work[r][col]:
                found = r
                break
        if found < 0:
            continue
        work[prow], work[found] = work[found], work[prow]
        pivot_row = work[prow]
        scale = m.field.inv_int(pivot_row[col])
        if scale != 1:
            for c in range(col, m.cols):
                pivot_row[c] = pivot_row[c] * scale % q
        targets = range(m.rows) if reduced else range(prow + 1, m.rows)
        for r in targets:
            if r == prow:
                continue
            factor = work[r][col]
            if factor:
                row = work[r]
                for c in range(col, m.cols):
                    row[c] = (row[c] - factor * pivot_row[c]) % q
        pivots.append(col)
        prow += 1
    return work, pivots


def row_echelon(m: FieldMatrix) -> EchelonResult:
    """Gaussian elimination to row echelon form with unit pivots.

    Pivot choice is the first nonzero entry at or below the current row.
    """
    work, pivots = _eliminate(m, reduced=False)
    ech = FieldMatrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in work))
    return EchelonResult(ech, len(pivots), tuple(pivots))


def reduced_row_echelon(m: FieldMatrix) -> EchelonResult:
    work, pivots = _eliminate(m, reduced=True)
    ech = FieldMatrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in work))
    return EchelonResult(ech, len(pivots), tuple(pivots))


def rank(m: FieldMatrix) -> int:
    return row_echelon(m).rank


def nullspace_basis(m: FieldMatrix) -> list[Vector]:
    """Basis of the right nullspace ``{x : m x = 0}``, one vector per free column."""
    q = m.field.q
    red = reduced_row_echelon(m)
    pivots = red.pivot_cols
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        x = [0] * m.cols
        x[free] = 1
        for r, p in enumerate(pivots):
            x[p] = (-red.echelon[r, free]) % q
        basis.append(tuple(x))
    for b in basis:
        if any(mat_vec(m, b)):
            raise AssertionError("nullspace vector fails m x = 0")
    return basis


def transpose(m: FieldMatrix) -> FieldMatrix:
    return FieldMatrix(m.field, m.cols, m.rows, tuple(zip(*m.data)) if m.rows else tuple(() for _ in range(m.cols)))


def delete_columns(m: FieldMatrix, idxs: Sequence[int]) -> FieldMatrix:
    """Drop the given 0-based columns (strictly increasing), keeping order."""
    prev = -1
    for i in idxs:
        if not 0 <= i < m.cols:
            raise IndexError(f"column index {i} out of range for {m.cols} columns")
        if i <= prev:
            raise ValueError("column indices must be strictly increasing and distinct")
        prev = i
    drop = set(idxs)
    keep = [c for c in range(m.cols) if c not in drop]
    return FieldMatrix(m.field, m.rows, len(keep), tuple(tuple(r[c] for c in keep) for r in m.data))


def append_row(m: FieldMatrix, row: Sequence[int]) -> FieldMatrix:
    if len(row) != m.cols:
        raise ShapeError(f"row of length {len(row)} does not fit {m.cols} columns")
    q = m.field.q
    return FieldMatrix(m.field, m.rows + 1, m.cols, m.data + (tuple(int(v) % q for v in row),))


def vstack(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    _require_same_field(a.field, b.field)
    if a.cols != b.cols:
        raise ShapeError(f"cannot stack {a.shape} on {b.shape}")
    return FieldMatrix(a.field, a.rows + b.rows, a.cols, a.data + b.data)


def vec_mat(x: Sequence[int], m: FieldMatrix) -> Vector:
    """Row vector times matrix, ``x m``."""
    if len(x) != m.rows:
        raise ShapeError(f"vector of length {len(x)} cannot multiply a {m.rows}x{m.cols} matrix")
    q = m.field.q
    out = [0] * m.cols
    for xi, r in zip(x, m.data):
        if xi:
            for c, v in enumerate(r):
                out[c] += xi * v
    return tuple(v % q for v in out)


def mat_vec(m: FieldMatrix, x: Sequence[int]) -> Vector:
    """Matrix times column vector, ``m x``."""
    if len(x) != m.cols:
        raise ShapeError(f"{m.rows}x{m.cols} matrix cannot multiply a vector of length {len(x)}")
    q = m.field.q
    return tuple(sum(a * b for a, b in zip(r, x)) % q for r in m.data)


def mat_mul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    _require_same_field(a.field, b.field)
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return FieldMatrix(a.field, a.rows, b.cols, tuple(vec_mat(r, b) for r in a.data))
