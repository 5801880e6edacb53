"""Linear codes given by a generator matrix, plus the weight-enumerator tools."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from lincode.errors import DegenerateGeneratorError, InternalConsistencyError, ShapeError
from lincode.gf import PrimeField
from lincode.linalg import (
    FieldMatrix,
    Vector,
    append_row,
    nullspace_basis,
    rank,
    vec_mat,
)

DEFAULT_ENUMERATION_BUDGET = 1 << 24


class LinearCode:
    """A ``[n, k]`` code over GF(q), stored as a validated ``k x n`` generator.

    The generator must have full row rank and no zero column.
    """

    def __init__(self, G: FieldMatrix):
        k, n = G.shape
        if k < 1 or k > n:
            raise ShapeError(f"generator must satisfy 1 <= k <= n, got k={k}, n={n}")
        for j in range(n):
            if not any(G[i, j] for i in range(k)):
                raise DegenerateGeneratorError(f"degenerate column {j + 1}")
        if rank(G) < k:
            raise DegenerateGeneratorError("degenerate generator: not full rank")
        self.G = G
        self.k = k
        self.n = n
        self.field = G.field

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]]) -> LinearCode:
        return cls(FieldMatrix.from_rows(PrimeField(q), rows))

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k}, q={self.q})"

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.G == other.G

    def __hash__(self):
        return hash(self.G)

    def _vector(self, w: Sequence[int], length: int, what: str) -> Vector:
        if len(w) != length:
            raise ShapeError(f"{what} has length {len(w)}, expected {length}")
        return tuple(int(v) % self.q for v in w)

    def encode(self, x: Sequence[int]) -> Vector:
        return vec_mat(self._vector(x, self.k, "message"), self.G)

    def is_codeword(self, w: Sequence[int]) -> bool:
        return rank(self.augment(w)) == self.k

    def augment(self, w: Sequence[int]) -> FieldMatrix:
        """Generator of the augmented code: ``G`` with ``w`` as an extra last row."""
        return append_row(self.G, self._vector(w, self.n, "word"))

    def dual_matrix(self) -> FieldMatrix:
        basis = nullspace_basis(self.G)
        return FieldMatrix.from_rows(self.field, basis, cols=self.n)

    def dual(self) -> LinearCode:
        """The dual code. Raises when it is ``{0}`` or has a zero coordinate."""
        return LinearCode(self.dual_matrix())

    def weight_distribution(self, budget: int = DEFAULT_ENUMERATION_BUDGET) -> WeightDistribution:
        from lincode.oracle import enumerate_codewords

        alpha = [0] * (self.n + 1)
        for c in enumerate_codewords(self, budget=budget):
            alpha[sum(1 for v in c if v)] += 1
        return WeightDistribution(tuple(alpha))


def new_code(G: FieldMatrix) -> LinearCode:
    return LinearCode(G)


def encode(c: LinearCode, x: Sequence[int]) -> Vector:
    return c.encode(x)


def is_codeword(c: LinearCode, w: Sequence[int]) -> bool:
    return c.is_codeword(w)


def augment(c: LinearCode, w: Sequence[int]) -> FieldMatrix:
    return c.augment(w)


def dual_matrix(c: LinearCode) -> FieldMatrix:
    return c.dual_matrix()


def weight_distribution(c: LinearCode, budget: int = DEFAULT_ENUMERATION_BUDGET) -> WeightDistribution:
    return c.weight_distribution(budget)


def hamming_weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def cyclic_generator_matrix(g: Sequence[int], n: int, field: PrimeField) -> FieldMatrix:
    """Rows ``x^i g(x)`` for ``i < n - deg g``; ``g`` lists coefficients from the constant term up."""
    coeffs = [int(c) % field.q for c in g]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("generator polynomial is zero")
    deg = len(coeffs) - 1
    if deg >= n:
        raise ValueError(f"deg g = {deg} must be less than n = {n}")
    k = n - deg
    rows = [[0] * i + coeffs + [0] * (n - deg - 1 - i) for i in range(k)]
    return FieldMatrix.from_rows(field, rows, cols=n)


@dataclass(frozen=True)
class WeightDistribution:
    """``alpha[i]`` counts the codewords of weight ``i``."""

    alpha: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.alpha) - 1

    @property
    def total(self) -> int:
        return sum(self.alpha)

    @property
    def min_distance(self) -> int | None:
        for i, a in enumerate(self.alpha[1:], start=1):
            if a:
                return i
        return None

    def polynomial(self) -> EnumeratorPolynomial:
        return EnumeratorPolynomial(self.alpha)


@dataclass(frozen=True)
class EnumeratorPolynomial:
    """Homogeneous ``W(X, Y) = sum_i alpha[i] X^(n-i) Y^i``."""

    alpha: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.alpha) - 1

    def __call__(self, X: int, Y: int) -> int:
        n = self.n
        return sum(a * X ** (n - i) * Y**i for i, a in enumerate(self.alpha))

    def __str__(self):
        n = self.n
        terms = []
        for i, a in enumerate(self.alpha):
            if not a:
                continue
            mono = "".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("X", n - i), ("Y", i)) if e
            )
            if not mono:
                terms.append(str(a))
            else:
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms) if terms else "0"


def macwilliams_transform(w, q: int, k: int) -> EnumeratorPolynomial:
    """Enumerator of the dual: ``q^-k W(X + (q-1) Y, X - Y)`` expanded on integers.

    ``w`` may be an EnumeratorPolynomial, a WeightDistribution or a plain
    coefficient sequence.
    """
    alpha = tuple(getattr(w, "alpha", w))
    n = len(alpha) - 1
    out = [0] * (n + 1)
    for i, a in enumerate(alpha):
        if not a:
            continue
        # (X + (q-1)Y)^(n-i) * (X - Y)^i, coefficient of X^(n-m) Y^m
        for s in range(n - i + 1):
            left = comb(n - i, s) * (q - 1) ** s
            for t in range(i + 1):
                term = left * comb(i, t)
                out[s + t] += -a * term if t & 1 else a * term
    scale = q**k
    result = []
    for m, c in enumerate(out):
        quot, rem = divmod(c, scale)
        if rem or quot < 0:
            raise InternalConsistencyError(
                f"coefficient of Y^{m} is {c}/{scale}, not a nonnegative integer"
            )
        result.append(quot)
    return EnumeratorPolynomial(tuple(result))
