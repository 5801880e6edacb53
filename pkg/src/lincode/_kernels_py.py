"""Pure-Python subset rank scan; fallback for the compiled ``_kernels``.

Both modules expose ``deficient_subsets`` with identical behaviour.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

MAX_PACKED_ROWS = 64


def _pack(columns: Sequence[Sequence[int]]) -> list[int]:
    return [sum(1 << i for i, v in enumerate(col) if v & 1) for col in columns]


def _packed_full_rank(vecs: list[int], target: int) -> bool:
    basis: dict[int, int] = {}
    for v in vecs:
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                if len(basis) == target:
                    return True
                break
            v ^= b
    return False


def _dense_full_rank(vecs: list[Sequence[int]], target: int, q: int) -> bool:
    pivots: dict[int, list[int]] = {}
    for vec in vecs:
        r = list(vec)
        for c in range(target):
            a = r[c]
            if not a:
                continue
            p = pivots.get(c)
            if p is None:
                inv = pow(a, q - 2, q)
                pivots[c] = [v * inv % q for v in r]
                if len(pivots) == target:
                    return True
                break
            for t in range(c, target):
                r[t] = (r[t] - a * p[t]) % q
    return False


def deficient_subsets(
    columns: Sequence[Sequence[int]],
    q: int,
    rows: int,
    j: int,
    lo: int = 0,
    hi: int | None = None,
    first_only: bool = False,
    packed: bool = True,
) -> tuple[int, list[tuple[int, ...]]]:
    """Scan the ``j``-subsets of column indices whose first element lies in ``[lo, hi)``.

    A subset is a hit when the columns left after deleting it span fewer
    than ``rows`` dimensions. Returns ``(subsets examined, hits)`` with hits
    in lexicographic order; ``first_only`` stops at the first hit.
    """
    n = len(columns)
    if j < 1 or j > n:
        raise ValueError(f"subset size {j} outside [1, {n}]")
    if hi is None:
        hi = n
    hi = min(hi, n - j + 1)
    use_packed = packed and q == 2 and rows <= MAX_PACKED_ROWS
    if use_packed:
        cols = _pack(columns)
        test = lambda vecs: _packed_full_rank(vecs, rows)  # noqa: E731
    else:
        cols = [tuple(c) for c in columns]
        test = lambda vecs: _dense_full_rank(vecs, rows, q)  # noqa: E731
    examined = 0
    hits: list[tuple[int, ...]] = []
    for first in range(lo, hi):
        for rest in combinations(range(first + 1, n), j - 1):
            subset = (first,) + rest
            examined += 1
            dropped = set(subset)
            if not test([cols[c] for c in range(n) if c not in dropped]):
                hits.append(subset)
                if first_only:
                    return examined, hits
    return examined, hits
