"""Homogeneous polynomials in x, y, z with exact coefficients.

Monomials are exponent triples ``(i, j, k)``.  Inside a fixed degree they are
ordered lexicographically with x > y > z (this is also the graded lex order),
so ``monomial_basis(2)`` is ``x^2, xy, xz, y^2, yz, z^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactfield import FieldMismatchError, FieldSpec, Scalar

Monomial = tuple

VARIABLES = ("x", "y", "z")


def num_monomials(d: int) -> int:
    return comb(d + 2, 2) if d >= 0 else 0


@lru_cache(maxsize=None)
def monomial_basis(d: int) -> tuple:
    if d < 0:
        return ()
    return tuple((i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1))


def monomial_index(m: Monomial) -> int:
    i, j, k = m
    d = i + j + k
    return (d - i) * (d - i + 1) // 2 + (d - i - j)


def monomial_str(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def divides(a: Monomial, b: Monomial) -> bool:
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


class HomPoly:
    """A homogeneous polynomial: a degree plus a dict monomial -> raw coefficient.

    Instances are treated as immutable.  The zero polynomial keeps the degree
    it was created with.
    """

    __slots__ = ("field", "degree", "terms", "_hash")

    def __init__(self, field: FieldSpec, degree: int, terms=None, *, trusted: bool = False):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self.field = field
        self.degree = degree
        self._hash = None
        if trusted:
            self.terms = terms if terms is not None else {}
            return
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != 3 or min(mono) < 0:
                raise ValueError(f"bad monomial {mono}")
            if sum(mono) != degree:
                raise ValueError(f"monomial {monomial_str(mono)} does not have degree {degree}")
            c = field.coerce(c)
            if c != 0:
                clean[mono] = field.add(clean.get(mono, field.zero), c)
                if clean[mono] == 0:
                    del clean[mono]
        self.terms = clean

    # construction helpers
    @classmethod
    def zero(cls, field, degree):
        return cls(field, degree, {}, trusted=True)

    @classmethod
    def constant(cls, field, c=1):
        return cls(field, 0, {(0, 0, 0): c})

    @classmethod
    def monomial(cls, field, exps, coeff=1):
        return cls(field, sum(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, field, name: str):
        exps = [0, 0, 0]
        exps[VARIABLES.index(name)] = 1
        return cls.monomial(field, exps)

    @classmethod
    def from_coords(cls, field, degree, coords):
        basis = monomial_basis(degree)
        if len(coords) != len(basis):
            raise ValueError("coordinate vector has the wrong length")
        return cls(field, degree, {m: c for m, c in zip(basis, coords) if c != 0}, trusted=True)

    def coords(self) -> list:
        vec = [self.field.zero] * num_monomials(self.degree)
        for m, c in self.terms.items():
            vec[monomial_index(m)] = c
        return vec

    # basic protocol
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, mono) -> Scalar:
        return Scalar(self.field, self.terms.get(tuple(mono), self.field.zero))

    def monomials(self) -> list:
        return sorted(self.terms, reverse=True)

    def leading_monomial(self):
        return max(self.terms) if self.terms else None

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.field != other.field or self.terms != other.terms:
            return False
        return self.degree == other.degree or not self.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine polynomials over {self.field} and {other.field}")

    # arithmetic
    def _combine(self, other, sign):
        if not isinstance(other, HomPoly):
            if other == 0:
                return self
            other = HomPoly.constant(self.field, other)
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other if sign > 0 else -other
        if other.degree != self.degree:
            raise ValueError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        f = self.field
        out = dict(self.terms)
        op = f.add if sign > 0 else f.sub
        for m, c in other.terms.items():
            v = op(out.get(m, f.zero), c)
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return HomPoly(f, self.degree, out, trusted=True)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        f = self.field
        return HomPoly(f, self.degree, {m: f.neg(c) for m, c in self.terms.items()}, trusted=True)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        if c == 0:
            return HomPoly.zero(f, self.degree)
        return HomPoly(f, self.degree, {m: f.mul(v, c) for m, v in self.terms.items()}, trusted=True)

    def __mul__(self, other):
        if not isinstance(other, HomPoly):
            return self.scale(other)
        self._check(other)
        f = self.field
        p = f.p
        out = {}
        for (a0, a1, a2), c in self.terms.items():
            for (b0, b1, b2), e in other.terms.items():
                key = (a0 + b0, a1 + b1, a2 + b2)
                out[key] = out.get(key, 0) + c * e
        if p:
            out = {m: v % p for m, v in out.items() if v % p}
        else:
            out = {m: v for m, v in out.items() if v}
        return HomPoly(f, self.degree + other.degree, out, trusted=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = HomPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def times_monomial(self, mono, coeff=1):
        f = self.field
        c = f.coerce(coeff)
        a0, a1, a2 = mono
        return HomPoly(
            f,
            self.degree + sum(mono),
            {(m[0] + a0, m[1] + a1, m[2] + a2): f.mul(v, c) for m, v in self.terms.items()} if c else {},
            trusted=True,
        )

    def frobenius_power(self, q: int):
        """f^q for q a power of the characteristic, using additivity of Frobenius."""
        f = self.field
        p = f.p
        if p == 0:
            raise ValueError("Frobenius powers need positive characteristic")
        r = q
        while r % p == 0:
            r //= p
        if r != 1:
            raise ValueError(f"{q} is not a power of {p}")
        # c^q = c for c in F_p
        return HomPoly(
            f,
            self.degree * q,
            {(m[0] * q, m[1] * q, m[2] * q): c for m, c in self.terms.items()},
            trusted=True,
        )

    def diff(self, var: int):
        f = self.field
        if self.degree == 0:
            return HomPoly.zero(f, 0)
        out = {}
        for m, c in self.terms.items():
            e = m[var]
            if e:
                v = f.mul(c, f.coerce(e))
                if v:
                    mm = list(m)
                    mm[var] -= 1
                    out[tuple(mm)] = v
        return HomPoly(f, self.degree - 1, out, trusted=True)

    def gradient(self):
        return tuple(self.diff(i) for i in range(3))

    def substitute_linear(self, matrix):
        """Replace variable i by sum_j matrix[i][j] * (variable j)."""
        f = self.field
        lin = [
            HomPoly(f, 1, {(1, 0, 0): row[0], (0, 1, 0): row[1], (0, 0, 1): row[2]})
            for row in matrix
        ]
        powers = [[HomPoly.constant(f, 1)] for _ in range(3)]
        result = HomPoly.zero(f, self.degree)
        for m, c in self.terms.items():
            term = HomPoly.constant(f, c)
            for i in range(3):
                while len(powers[i]) <= m[i]:
                    powers[i].append(powers[i][-1] * lin[i])
                term = term * powers[i][m[i]]
            result = result + term
        return result

    def evaluate(self, point):
        f = self.field
        pt = [f.coerce(v) for v in point]
        total = f.zero
        for m, c in self.terms.items():
            v = c
            for a, e in zip(pt, m):
                v = f.mul(v, f.power(a, e))
            total = f.add(total, v)
        return Scalar(f, total)

    def is_pure_power(self):
        """Return (variable index, exponent) if this is c * var^e, else None."""
        if len(self.terms) != 1:
            return None
        (m,) = self.terms
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) != 1:
            return None
        return nz[0], m[nz[0]]

    # printing
    def __str__(self):
        if not self.terms:
            return "0"
        f = self.field
        out = []
        for m in sorted(self.terms, reverse=True):
            c = f.symmetric(self.terms[m])
            neg = c < 0
            c = -c if neg else c
            mono = monomial_str(m)
            if mono == "1":
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c}*{mono}"
            if out:
                out.append(("-" if neg else "+") + body)
            else:
                out.append(("-" if neg else "") + body)
        return "".join(out)

    def __repr__(self):
        return f"HomPoly({self}, degree={self.degree}, {self.field})"


# parsing

class PolyParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InhomogeneousError(PolyParseError):
    def __init__(self, by_degree: dict):
        self.by_degree = by_degree
        parts = [
            f"degree {d}: " + ", ".join(monomial_str(m) for m in sorted(ms, reverse=True))
            for d, ms in sorted(by_degree.items())
        ]
        super().__init__("polynomial is not homogeneous; " + "; ".join(parts))


_TOKEN = re.compile(r"\s*(?:(\d+)|([xyzXYZ])|(\^)|(\*)|(/)|(\+)|(-))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolyParseError(f"unexpected character {text[col]!r}", col)
        kind = m.lastindex
        start = m.start(kind)
        value = m.group(kind)
        tokens.append((("num", "var", "^", "*", "/", "+", "-")[kind - 1], value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_terms(text: str):
    """Parse into a list of (monomial, Fraction) pairs, before homogeneity checks."""
    if not text.strip():
        raise PolyParseError("empty polynomial", 0)
    tokens = _tokenize(text)
    i = 0
    terms = []

    def peek():
        return tokens[i]

    sign = 1
    kind, _, _ = peek()
    if kind in "+-":
        sign = -1 if kind == "-" else 1
        i += 1
    while True:
        coeff = Fraction(sign)
        exps = [0, 0, 0]
        seen_factor = False
        while True:
            kind, value, pos = peek()
            if kind == "num":
                i += 1
                num = int(value)
                if peek()[0] == "/":
                    i += 1
                    k2, v2, p2 = peek()
                    if k2 != "num":
                        raise PolyParseError("expected denominator", p2)
                    i += 1
                    if int(v2) == 0:
                        raise PolyParseError("zero denominator", p2)
                    coeff *= Fraction(num, int(v2))
                else:
                    coeff *= num
            elif kind == "var":
                i += 1
                e = 1
                if peek()[0] == "^":
                    i += 1
                    k2, v2, p2 = peek()
                    if k2 != "num":
                        raise PolyParseError("expected exponent", p2)
                    i += 1
                    e = int(v2)
                exps[VARIABLES.index(value.lower())] += e
            else:
                raise PolyParseError(f"expected a number or variable, got {value or 'end of input'!r}", pos)
            seen_factor = True
            kind = peek()[0]
            if kind == "*":
                i += 1
                continue
            if kind in ("var", "num") and seen_factor:
                # implicit product such as 2x or xy
                continue
            break
        terms.append((tuple(exps), coeff))
        kind, value, pos = peek()
        if kind == "end":
            return terms
        if kind not in "+-":
            raise PolyParseError(f"unexpected {value!r}", pos)
        sign = -1 if kind == "-" else 1
        i += 1


def parse_poly(text: str, field: FieldSpec, degree=None) -> HomPoly:
    """Parse ``c*x^i*y^j*z^k`` terms joined by + and -.

    Coefficients are integers or fractions a/b, reduced into ``field``.
    Raises :class:`PolyParseError` on bad syntax or a coefficient that does not
    exist in the field, and :class:`InhomogeneousError` listing the offending
    monomials when the degrees differ.
    """
    raw = parse_terms(text)
    acc = {}
    for mono, c in raw:
        try:
            v = field.coerce(c)
        except ZeroDivisionError:
            raise PolyParseError(f"coefficient {c} is not an element of {field}") from None
        acc[mono] = field.add(acc.get(mono, field.zero), v)
    nonzero = {m: c for m, c in acc.items() if c != 0}
    degrees = {}
    for m in nonzero:
        degrees.setdefault(sum(m), []).append(m)
    if len(degrees) > 1:
        raise InhomogeneousError(degrees)
    if degrees:
        (d,) = degrees
    else:
        # every term cancelled; keep the written degree if unambiguous
        written = {sum(m) for m, _ in raw}
        d = written.pop() if len(written) == 1 else 0
    if degree is not None and nonzero and d != degree:
        raise PolyParseError(f"expected a form of degree {degree}, got degree {d}")
    if degree is not None:
        d = degree
    return HomPoly(field, d, nonzero, trusted=True)


def parse_poly_list(text: str, field: FieldSpec) -> list:
    parts = [t for t in text.split(",")]
    if any(not t.strip() for t in parts):
        raise PolyParseError("empty entry in polynomial list")
    return [parse_poly(t, field) for t in parts]
