"""Bounded-distance decoding through the augmented code.

For a received ``w``, the code spanned by ``G`` and ``w`` contains the error
``e = w - v`` as its lightest word with a nonzero ``w`` coefficient. Deleting
``j`` columns from the augmented generator and finding a solution with last
coordinate 1 recovers an error of weight at most ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from lincode import _backend
from lincode.code import LinearCode
from lincode.errors import InconsistentDistanceError, ShapeError
from lincode.linalg import Vector, delete_columns, nullspace_basis, transpose, vec_mat
from lincode.mindist import min_distance


@dataclass(frozen=True)
class Decoded:
    e: Vector
    v: Vector
    error_positions: tuple[int, ...]  # 1-based
    corrections: int


@dataclass(frozen=True)
class AlreadyCodeword:
    v: Vector

    @property
    def e(self) -> Vector:
        return (0,) * len(self.v)


@dataclass(frozen=True)
class NonDecodable:
    radius_tried: int


DecodeResult = Union[Decoded, AlreadyCodeword, NonDecodable]


def correction_radius(d: int) -> int:
    return (d - 1) // 2


def decode(
    code: LinearCode,
    w: Sequence[int],
    d: int | None = None,
    threads: int = 1,
    kernel: Callable | None = None,
) -> DecodeResult:
    """Decode ``w`` to the unique codeword within ``(d-1)//2``, if there is one.

    ``d`` is the code's minimum distance; it is computed when omitted. A
    wrong ``d`` is reported as InconsistentDistanceError when it shows up.
    """
    if len(w) != code.n:
        raise ShapeError(f"word has length {len(w)}, expected {code.n}")
    q, k = code.q, code.k
    w = tuple(int(v) % q for v in w)
    if d is None:
        d = min_distance(code, threads=threads, kernel=kernel).d
    elif not 1 <= d <= code.n - k + 1:
        raise InconsistentDistanceError(f"d={d} violates 1 <= d <= n-k+1 = {code.n - k + 1}")
    if code.is_codeword(w):
        return AlreadyCodeword(w)
    radius = correction_radius(d)
    Gw = code.augment(w)
    columns = Gw.columns()
    for j in range(1, radius + 1):
        _, hits = _backend.scan(columns, q, k + 1, j, threads=threads, first_only=True, kernel=kernel)
        if not hits:
            continue
        basis = nullspace_basis(transpose(delete_columns(Gw, hits[0])))
        if len(basis) != 1:
            raise InconsistentDistanceError(
                f"solution space of dimension {len(basis)} at level {j}; d={d} is too large"
            )
        x = basis[0]
        if x[-1] == 0:
            raise InconsistentDistanceError(f"codeword of weight <= {j} found; d={d} is too large")
        scale = pow(x[-1], q - 2, q)
        x = tuple(v * scale % q for v in x)
        e = vec_mat(x, Gw)
        v = tuple((a - b) % q for a, b in zip(w, e))
        positions = tuple(i + 1 for i, val in enumerate(e) if val)
        return Decoded(e, v, positions, len(positions))
    return NonDecodable(radius)
