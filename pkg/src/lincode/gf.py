"""Arithmetic in prime fields GF(q), q < 2**16."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from lincode.errors import FieldMismatchError

MAX_ORDER = 1 << 16


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        quot, rem = divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, s0 - quot * s1
        t0, t1 = t1, t0 - quot * t1
    return a, s0, t0


@lru_cache(maxsize=None)
def _inverse_mod(a: int, q: int) -> int:
    g, s, _ = egcd(a, q)
    if g != 1:
        raise ZeroDivisionError(f"{a} has no inverse modulo {q}")
    return s % q


@dataclass(frozen=True)
class PrimeField:
    """The field of residues modulo a prime ``q``."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or isinstance(self.q, bool):
            raise TypeError(f"field order must be an int, got {type(self.q).__name__}")
        if not 2 <= self.q < MAX_ORDER:
            raise ValueError(f"field order {self.q} outside [2, 2**16)")
        if not is_prime(self.q):
            raise ValueError(f"field order {self.q} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.q, self)

    def __repr__(self):
        return f"GF({self.q})"

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(v, self) for v in range(self.q)]

    # Raw-residue helpers used by the matrix code, which keeps plain ints.
    def inv_int(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return _inverse_mod(a, self.q)

    def reduce(self, a: int) -> int:
        return a % self.q


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"residue {self.value} not reduced modulo {self.field.q}")

    def _check(self, other) -> FieldElement:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine {self.field!r} and {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value + other.value) % self.field.q, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value - other.value) % self.field.q, self.field)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value * other.value) % self.field.q, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement((-self.value) % self.field.q, self.field)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv_int(self.value), self.field)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse by the extended Euclidean algorithm.

    Raises ZeroDivisionError for zero.
    """
    return a.inverse()
