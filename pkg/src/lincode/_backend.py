"""Pick the subset-scan kernel at import time.

The compiled kernel is used when it was built; setting ``LINCODE_PURE_PYTHON=1``
forces the pure-Python one.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from math import comb
from typing import Callable, Sequence

from lincode import _kernels_py

python_kernel = _kernels_py.deficient_subsets

try:
    from lincode import _kernels as _compiled

    compiled_kernel: Callable | None = _compiled.deficient_subsets
except ImportError:  # extension not built
    compiled_kernel = None

if compiled_kernel is not None and not os.environ.get("LINCODE_PURE_PYTHON"):
    deficient_subsets = compiled_kernel
    BACKEND = "cython"
else:
    deficient_subsets = python_kernel
    BACKEND = "python"


def _chunks(n: int, j: int, parts: int) -> list[tuple[int, int]]:
    """Split first-index range into contiguous pieces of roughly equal subset counts."""
    firsts = n - j + 1
    weights = [comb(n - 1 - f, j - 1) for f in range(firsts)]
    total = sum(weights)
    parts = max(1, min(parts, firsts))
    bounds = []
    lo, acc, target = 0, 0, total / parts
    for f, w in enumerate(weights):
        acc += w
        if acc >= target * (len(bounds) + 1) and len(bounds) < parts - 1:
            bounds.append((lo, f + 1))
            lo = f + 1
    if lo < firsts:
        bounds.append((lo, firsts))
    return bounds


def scan(
    columns: Sequence[Sequence[int]],
    q: int,
    rows: int,
    j: int,
    threads: int = 1,
    first_only: bool = False,
    kernel: Callable | None = None,
    packed: bool = True,
) -> tuple[int, list[tuple[int, ...]]]:
    """Run the kernel over all ``j``-subsets, optionally split across threads.

    Hits come back in lexicographic order whatever the thread count; with
    ``first_only`` the lexicographically smallest hit is returned.
    """
    kernel = kernel or deficient_subsets
    n = len(columns)
    pieces = _chunks(n, j, threads)
    if len(pieces) == 1:
        lo, hi = pieces[0]
        return kernel(columns, q, rows, j, lo, hi, first_only, packed)
    with ThreadPoolExecutor(max_workers=len(pieces)) as pool:
        results = list(
            pool.map(lambda b: kernel(columns, q, rows, j, b[0], b[1], first_only, packed), pieces)
        )
    examined = 0
    hits: list[tuple[int, ...]] = []
    for ex, h in results:
        examined += ex
        if first_only and hits:
            continue
        hits.extend(h)
    if first_only:
        hits = hits[:1]
    return examined, hits
