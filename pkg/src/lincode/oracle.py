"""Brute-force references: plain enumeration of every codeword.

Nothing here goes through the elimination code, so these results can be
used to check the Gaussian-elimination routines.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from lincode.errors import BudgetExceededError

DEFAULT_BUDGET = 1 << 24


def enumerate_span(G, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, ...]]:
    """Yield ``xG`` for every ``x`` in lexicographic order (duplicates kept if G is singular)."""
    q, k, n = G.field.q, G.rows, G.cols
    size = q**k
    if size > budget:
        raise BudgetExceededError(
            f"too large to enumerate: q^k = {size} exceeds budget {budget}",
            {"codewords": size, "budget": budget},
        )
    rows = G.data
    for x in product(range(q), repeat=k):
        word = [0] * n
        for xi, row in zip(x, rows):
            if xi:
                for j in range(n):
                    word[j] += xi * row[j]
        yield tuple(v % q for v in word)


def enumerate_codewords(c, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[int, ...]]:
    """Every codeword of ``c`` exactly once, messages in lexicographic order."""
    return enumerate_span(c.G, budget)


def span_weight_distribution(G, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Weight counts over the row space of ``G``; G needs full row rank.

    A zero-row matrix spans ``{0}``.
    """
    alpha = [0] * (G.cols + 1)
    for w in enumerate_span(G, budget):
        alpha[sum(1 for v in w if v)] += 1
    return tuple(alpha)


def _weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def oracle_min_distance(c, budget: int = DEFAULT_BUDGET) -> tuple[int, list[tuple[int, ...]]]:
    """Minimum nonzero weight and every codeword attaining it (sorted)."""
    best = c.n + 1
    found: list[tuple[int, ...]] = []
    for w in enumerate_codewords(c, budget):
        wt = _weight(w)
        if wt == 0:
            continue
        if wt < best:
            best, found = wt, [w]
        elif wt == best:
            found.append(w)
    return best, sorted(found)


def oracle_nearest(c, w: Sequence[int], budget: int = DEFAULT_BUDGET) -> tuple[int, list[tuple[int, ...]]]:
    """Distance from ``w`` to the code and all codewords at that distance (sorted)."""
    if len(w) != c.n:
        raise ValueError(f"word has length {len(w)}, expected {c.n}")
    w = tuple(int(v) % c.q for v in w)
    best = c.n + 1
    found: list[tuple[int, ...]] = []
    for v in enumerate_codewords(c, budget):
        dist = sum(1 for a, b in zip(v, w) if a != b)
        if dist < best:
            best, found = dist, [v]
        elif dist == best:
            found.append(v)
    return best, sorted(found)


def oracle_pairwise_distance(c, budget: int = 1 << 12) -> int:
    """Minimum distance between distinct codewords, by all pairs."""
    words = list(enumerate_codewords(c, budget))
    best = c.n + 1
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            best = min(best, sum(1 for x, y in zip(a, b) if x != y))
    return best
