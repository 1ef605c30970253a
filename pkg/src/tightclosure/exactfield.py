"""Exact scalar arithmetic over a prime field F_p or over Q.

Hot loops elsewhere in the package work on raw values (plain ``int`` residues
for F_p, ``Fraction`` for Q) through the helpers on :class:`FieldSpec`.
:class:`Scalar` is the user-facing wrapper with operator overloading.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

MAX_CHARACTERISTIC = 2**31


class FieldMismatchError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A field given by its characteristic: 0 means Q, a prime p means F_p."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError("characteristic must be an int")
        if p != 0 and not is_prime(p):
            raise ValueError(f"characteristic {p} is neither 0 nor a prime")
        if p >= MAX_CHARACTERISTIC:
            raise ValueError(f"characteristic {p} must be below 2^31")

    @property
    def p(self) -> int:
        return self.characteristic

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    # raw-value helpers
    def coerce(self, value):
        """Turn an int, Fraction, numeric string or Scalar into a raw value."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar over {value.field} used over {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            value = int(value)
        p = self.characteristic
        if isinstance(value, int):
            return value % p if p else Fraction(value)
        if isinstance(value, Fraction):
            if p == 0:
                return value
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"{value} is not defined in GF({p})")
            return value.numerator * pow(den, -1, p) % p
        raise TypeError(f"cannot interpret {value!r} as a field element")

    @property
    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def add(self, a, b):
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a, b):
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul(self, a, b):
        p = self.characteristic
        return a * b % p if p else a * b

    def neg(self, a):
        p = self.characteristic
        return -a % p if p else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n: int):
        p = self.characteristic
        if n < 0:
            return self.power(self.inv(a), -n)
        return pow(a, n, p) if p else a**n

    def random(self, rng: random.Random, bound: int = 10):
        """Random element; over Q an integer in [-bound, bound]."""
        p = self.characteristic
        if p:
            return rng.randrange(p)
        return Fraction(rng.randint(-bound, bound))

    def symmetric(self, a):
        """Representative used for printing: residues in (-p/2, p/2]."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    if p == 0:
        raise ValueError("GF(0) is not a field; use QQ")
    return FieldSpec(p)


@dataclass(frozen=True)
class Scalar:
    field: FieldSpec
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} with {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return Scalar(self.field, self.field.power(self.value, n))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.field.symmetric(self.value))

    def __repr__(self):
        return f"Scalar({self}, {self.field})"
