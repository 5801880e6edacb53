"""Minimum distance by exhaustive column deletion.

At level ``j`` every set of ``j`` columns is deleted from ``G``; the
remaining columns, read as linear forms in the message coordinates, fail to
span the whole message space exactly when some nonzero message vanishes on
all of them, i.e. encodes to a codeword supported inside the deleted set.
The first level with such a message is ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Callable, Iterator, Sequence

from lincode import _backend
from lincode.code import LinearCode
from lincode.errors import BudgetExceededError, InternalConsistencyError
from lincode.linalg import Vector, delete_columns, nullspace_basis, transpose, vec_mat

DEFAULT_MAX_WORK = 10**8
DEFAULT_MAX_POINTS = 1 << 20


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Nonzero vector scaled so its first nonzero coordinate is 1."""

    coords: Vector

    def __post_init__(self):
        lead = next((v for v in self.coords if v), 0)
        if lead == 0:
            raise ValueError("projective point cannot be the zero vector")
        if lead != 1:
            raise ValueError("projective point is not canonically scaled")

    @classmethod
    def from_vector(cls, vec: Sequence[int], q: int) -> ProjectivePoint:
        lead = next((v % q for v in vec if v % q), 0)
        if lead == 0:
            raise ValueError("projective point cannot be the zero vector")
        inv = pow(lead, q - 2, q)
        return cls(tuple(v * inv % q for v in vec))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class DistanceReport:
    d: int
    X: tuple[ProjectivePoint, ...]
    Y: tuple[Vector, ...]
    subsets_examined: dict[int, int] = field(default_factory=dict)
    hits: dict[int, int] = field(default_factory=dict)

    @property
    def levels_scanned(self) -> tuple[int, int]:
        levels = sorted(self.subsets_examined)
        return levels[0], levels[-1]


def subsets(n: int, j: int) -> Iterator[tuple[int, ...]]:
    """All strictly increasing 0-based ``j``-tuples from ``range(n)``, lexicographically."""
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    return combinations(range(n), j)


def projective_points(basis: Sequence[Vector], q: int, cap: int = DEFAULT_MAX_POINTS) -> list[ProjectivePoint]:
    """Every projective point of the span of ``basis`` (assumed independent)."""
    dim = len(basis)
    if dim == 0:
        return []
    count = (q**dim - 1) // (q - 1)
    if count > cap:
        raise BudgetExceededError(
            f"nullspace of dimension {dim} has {count} projective points, cap is {cap}",
            {"points": count, "cap": cap},
        )
    width = len(basis[0])
    points = []
    for lead in range(dim):
        for tail in product(range(q), repeat=dim - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            vec = [0] * width
            for c, b in zip(coeffs, basis):
                if c:
                    for t in range(width):
                        vec[t] += c * b[t]
            points.append(ProjectivePoint.from_vector(vec, q))
    return points


def _points_for_subset(code: LinearCode, subset: Sequence[int], cap: int) -> list[ProjectivePoint]:
    H = transpose(delete_columns(code.G, subset))
    return projective_points(nullspace_basis(H), code.q, cap)


def _scan_level(
    code: LinearCode, j: int, max_points: int, threads: int, kernel: Callable | None
) -> tuple[list[ProjectivePoint], int, int]:
    examined, hits = _backend.scan(code.G.columns(), code.q, code.k, j, threads=threads, kernel=kernel)
    found: set[ProjectivePoint] = set()
    for subset in hits:
        found.update(_points_for_subset(code, subset, max_points))
        if len(found) > max_points:
            raise BudgetExceededError(f"more than {max_points} projective points at level {j}")
    return sorted(found), examined, len(hits)


def level_scan(
    code: LinearCode,
    j: int,
    max_points: int = DEFAULT_MAX_POINTS,
    threads: int = 1,
    kernel: Callable | None = None,
) -> tuple[ProjectivePoint, ...]:
    """Union of the projective solution sets over all ``j``-column deletions."""
    if not 1 <= j <= code.n:
        raise ValueError(f"level {j} outside [1, {code.n}]")
    points, _, _ = _scan_level(code, j, max_points, threads, kernel)
    return tuple(points)


def min_distance(
    code: LinearCode,
    start_level: int = 1,
    max_work: int = DEFAULT_MAX_WORK,
    max_points: int = DEFAULT_MAX_POINTS,
    threads: int = 1,
    kernel: Callable | None = None,
) -> DistanceReport:
    """Scan levels ``start_level .. n-k+1`` and stop after the first level with solutions.

    ``start_level`` must be a known lower bound on ``d``; nothing checks it.
    Each level is scanned completely, so ``Y`` holds every minimum-weight
    codeword up to scalar multiples. ``max_work`` caps the total number of
    column subsets examined.
    """
    n, k = code.n, code.k
    top = n - k + 1
    if not 1 <= start_level <= top:
        raise ValueError(f"start_level must lie in [1, {top}], got {start_level}")
    examined: dict[int, int] = {}
    hit_counts: dict[int, int] = {}
    work = 0
    for j in range(start_level, top + 1):
        work += comb(n, j)
        if work > max_work:
            raise BudgetExceededError(
                f"level {j} needs {work} cumulative subset evaluations, budget is {max_work}",
                {"subsets_examined": dict(examined), "next_level": j, "budget": max_work},
            )
        points, count, nhits = _scan_level(code, j, max_points, threads, kernel)
        examined[j] = count
        hit_counts[j] = nhits
        if points:
            Y = tuple(vec_mat(x.coords, code.G) for x in points)
            return DistanceReport(j, tuple(points), Y, examined, hit_counts)
    raise InternalConsistencyError("no level up to n-k+1 produced a solution")
