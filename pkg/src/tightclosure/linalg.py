"""Exact linear algebra over F_p and Q.

Matrices are lists of rows of raw field values.  Two backends compute the
reduced row echelon form: python-flint (``nmod_mat`` / ``fmpq_mat``) for speed,
and a plain Gaussian elimination kept as an independent reference.  Every
other routine here is derived from ``rref``.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .exactfield import FieldSpec

try:
    import flint
except ImportError:  # pragma: no cover - flint is a declared dependency
    flint = None

_BACKEND = os.environ.get("TIGHTCLOSURE_LINALG", "flint" if flint is not None else "python")


def set_backend(name: str) -> str:
    """Select "flint" or "python"; returns the previous backend."""
    global _BACKEND
    if name not in ("flint", "python"):
        raise ValueError(name)
    if name == "flint" and flint is None:
        raise RuntimeError("python-flint is not installed")
    old, _BACKEND = _BACKEND, name
    return old


def get_backend() -> str:
    return _BACKEND


def rref_python(rows, field: FieldSpec, ncols: int):
    """Reference elimination.

    Over F_p the pivot is the first nonzero entry in the column; over Q it is
    the entry with the smallest bit size, which keeps intermediate fractions
    small.
    """
    p = field.p
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(mat)
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        if p:
            for i in range(r, nrows):
                if mat[i][c] % p:
                    best = i
                    break
        else:
            size = None
            for i in range(r, nrows):
                v = mat[i][c]
                if v:
                    s = abs(v.numerator).bit_length() + v.denominator.bit_length()
                    if size is None or s < size:
                        best, size = i, s
        if best is None:
            continue
        mat[r], mat[best] = mat[best], mat[r]
        row = mat[r]
        if p:
            inv = pow(row[c], -1, p)
            row = [v * inv % p for v in row]
        else:
            inv = 1 / row[c]
            row = [v * inv for v in row]
        mat[r] = row
        for i in range(nrows):
            if i != r:
                f = mat[i][c]
                if f:
                    other = mat[i]
                    if p:
                        mat[i] = [(a - f * b) % p for a, b in zip(other, row)]
                    else:
                        mat[i] = [a - f * b for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def _rref_flint(rows, field: FieldSpec, ncols: int):
    p = field.p
    nrows = len(rows)
    flat = [v for row in rows for v in row]
    if p:
        m = flint.nmod_mat(nrows, ncols, flat, p)
        red, rank = m.rref()
        entries = [int(v) for v in red.entries()]
    else:
        m = flint.fmpq_mat(nrows, ncols, [flint.fmpq(v.numerator, v.denominator) for v in flat])
        red, rank = m.rref()
        entries = [Fraction(int(v.p), int(v.q)) for v in red.entries()]
    out = [entries[i * ncols:(i + 1) * ncols] for i in range(rank)]
    pivots = []
    for row in out:
        for j, v in enumerate(row):
            if v:
                pivots.append(j)
                break
    return out, pivots


def rref(rows, field: FieldSpec, ncols: int | None = None, backend: str | None = None):
    """Return (nonzero rows of the reduced echelon form, pivot columns)."""
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    if not rows or ncols == 0:
        return [], []
    if not field.p:
        rows = [[v if isinstance(v, Fraction) else Fraction(v) for v in r] for r in rows]
    if (backend or _BACKEND) == "flint":
        return _rref_flint(rows, field, ncols)
    return rref_python(rows, field, ncols)


def rank(rows, field, ncols=None) -> int:
    return len(rref(rows, field, ncols)[1])


def kernel_basis(rows, field: FieldSpec, ncols: int) -> list:
    """Basis of {v : M v = 0}; one vector per free column, 1 at that column."""
    red, pivots = rref(rows, field, ncols)
    pivset = set(pivots)
    one = field.one
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = one
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = field.neg(row[free])
        basis.append(v)
    return basis


def transpose(rows, nrows_out: int):
    if not rows:
        return [[] for _ in range(nrows_out)]
    return [list(col) for col in zip(*rows)]


def column_kernel(columns, field: FieldSpec, dim: int) -> list:
    """Kernel of the matrix whose columns are the given vectors of length dim."""
    n = len(columns)
    if n == 0:
        return []
    if dim == 0:
        return [[field.one if i == j else field.zero for i in range(n)] for j in range(n)]
    return kernel_basis(transpose(columns, dim), field, n)


def row_basis(vectors, field: FieldSpec, ncols: int) -> list:
    """Reduced echelon basis of the span of the vectors."""
    return rref(vectors, field, ncols)[0]


def span_membership(v, basis, field: FieldSpec):
    """Decide v in span(basis); on success return coefficients c with sum c_i b_i = v."""
    n = len(v)
    if any(len(b) != n for b in basis):
        raise ValueError("dimension mismatch")
    if not basis:
        return (all(x == 0 for x in v), [] if all(x == 0 for x in v) else None)
    k = len(basis)
    rows = [[b[i] for b in basis] + [v[i]] for i in range(n)]
    red, pivots = rref(rows, field, k + 1)
    if pivots and pivots[-1] == k:
        return False, None
    coeffs = [field.zero] * k
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[k]
    return True, coeffs
