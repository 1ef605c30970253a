"""Graded syzygies of homogeneous generators f_1..f_n of an ideal of R.

A syzygy of total degree k is a tuple (g_1..g_n) with g_i in R_{k-d_i} and
sum g_i f_i = 0 in R.  Entries are kept as normal forms, so the space
computed here is the full degree-k piece of the syzygy module over R.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .curvering import CurveRing, IdealGens
from .polyspace import HomPoly


@dataclass(frozen=True)
class SyzygyVec:
    entries: tuple
    degree: int

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def strings(self) -> list:
        return [str(e) for e in self.entries]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)


@dataclass(frozen=True)
class SyzygySpace:
    degree: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def _column_layout(gens: IdealGens, k: int):
    """Columns (generator index, multiplier, image terms) of the map (+) R_{k-d_i} -> R_k."""
    ring = gens.ring
    layout = []
    for i, g in enumerate(gens.reduced):
        if k < g.degree:
            continue
        for h, terms in zip(ring.standard_basis(k - g.degree), ring.multiples(g, k)):
            layout.append((i, h, terms))
    return layout


def _matrix_rows(ring: CurveRing, layout, k: int):
    idx = ring.standard_index(k)
    dim = len(idx)
    zero = ring.field.zero
    rows = [[zero] * len(layout) for _ in range(dim)]
    for j, (_, _, terms) in enumerate(layout):
        for mono, c in terms.items():
            rows[idx[mono]][j] = c
    return rows, dim


def _vector_to_syzygy(gens: IdealGens, layout, vec, k: int) -> SyzygyVec:
    field = gens.ring.field
    entries = [dict() for _ in gens.degrees]
    for (i, h, _), c in zip(layout, vec):
        if c:
            entries[i][h] = c
    return SyzygyVec(
        tuple(HomPoly(field, max(k - d, 0), e, trusted=True) for d, e in zip(gens.degrees, entries)),
        k,
    )


def syzygy_space(gens: IdealGens, k: int) -> SyzygySpace:
    """Basis of the degree-k syzygies, in reduced echelon form over the multiplier coordinates."""
    layout = _column_layout(gens, k)
    if not layout:
        return SyzygySpace(k, ())
    rows, dim = _matrix_rows(gens.ring, layout, k)
    field = gens.ring.field
    if dim == 0:
        kernel = linalg.column_kernel([[] for _ in layout], field, 0)
    else:
        kernel = linalg.kernel_basis(rows, field, len(layout))
    # canonical basis: echelon form with pivots on the earliest coordinates
    kernel = linalg.row_basis(kernel, field, len(layout)) if kernel else []
    return SyzygySpace(k, tuple(_vector_to_syzygy(gens, layout, v, k) for v in kernel))


def syzygy_dim(gens: IdealGens, k: int) -> int:
    cache = gens.cache.setdefault("syzygy_dim", {})
    if k in cache:
        return cache[k]
    layout = _column_layout(gens, k)
    if not layout:
        value = 0
    else:
        rows, dim = _matrix_rows(gens.ring, layout, k)
        value = len(layout) - (linalg.rank(rows, gens.ring.field, len(layout)) if dim else 0)
    cache[k] = value
    return value


def koszul_syzygies(gens: IdealGens, k: int) -> list:
    """Spanning set of the degree-k part of the module generated by the Koszul relations."""
    ring = gens.ring
    n = gens.n
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            t = k - gens.degrees[i] - gens.degrees[j]
            if t < 0:
                continue
            for h in ring.standard_basis(t):
                entries = [HomPoly.zero(ring.field, max(k - d, 0)) for d in gens.degrees]
                # f_j e_i - f_i e_j, scaled by h
                entries[i] = ring.reduce(gens.reduced[j].times_monomial(h))
                entries[j] = -ring.reduce(gens.reduced[i].times_monomial(h))
                out.append(SyzygyVec(tuple(entries), k))
    return out


def syzygy_coords(gens: IdealGens, s: SyzygyVec) -> list:
    ring = gens.ring
    vec = []
    for d, e in zip(gens.degrees, s.entries):
        if s.degree >= d:
            vec.extend(ring.coords(e) if not e.is_zero() else [ring.field.zero] * ring.hilbert_dim(s.degree - d))
    return vec


def koszul_dim(gens: IdealGens, k: int) -> int:
    vecs = [syzygy_coords(gens, s) for s in koszul_syzygies(gens, k)]
    if not vecs:
        return 0
    return linalg.rank(vecs, gens.ring.field, len(vecs[0]))


def koszul_basis(gens: IdealGens, k: int) -> SyzygySpace:
    syz = koszul_syzygies(gens, k)
    if not syz:
        return SyzygySpace(k, ())
    vecs = [syzygy_coords(gens, s) for s in syz]
    red = linalg.row_basis(vecs, gens.ring.field, len(vecs[0]))
    layout = [(i, h, None) for i, d in enumerate(gens.degrees) if k >= d
              for h in gens.ring.standard_basis(k - d)]
    return SyzygySpace(k, tuple(_vector_to_syzygy(gens, layout, v, k) for v in red))


def verify_syzygy(gens: IdealGens, s: SyzygyVec) -> bool:
    """Check degrees and the relation sum g_i f_i = 0 in R."""
    ring = gens.ring
    if len(s.entries) != gens.n:
        return False
    total = HomPoly.zero(ring.field, s.degree)
    for g, f, d in zip(s.entries, gens.polys, gens.degrees):
        if g.is_zero():
            continue
        if g.degree != s.degree - d:
            return False
        total = total + g * f
    return ring.reduce(total).is_zero()


def minimal_syzygy_degree(gens: IdealGens, k_max: int | None = None):
    """Least k with a nonzero degree-k syzygy, or None if there is none up to k_max.

    Nonzero syzygies stay nonzero after multiplying by a nonzero linear form
    (R is a domain), so the dimension is positive on an up-set and bisection
    applies.
    """
    if gens.n < 2:
        return None
    if k_max is None:
        k_max = gens.degree_sum
    lo = min(gens.degrees)
    if lo > k_max or syzygy_dim(gens, k_max) == 0:
        return None
    hi = k_max
    while lo < hi:
        mid = (lo + hi) // 2
        if syzygy_dim(gens, mid) > 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


def is_primary_syzygy(s: SyzygyVec, ring: CurveRing) -> bool:
    """True iff the entries have no common zero on the curve."""
    if s.is_zero():
        raise ValueError("the zero syzygy has no zero set")
    return ring.zeroset_empty([e for e in s.entries if not e.is_zero()])


def find_primary_syzygy(gens: IdealGens, k: int, trials: int = 20, seed: int = 0, space=None):
    """Search the degree-k syzygies for a primary one.

    Basis vectors are tried first, then random combinations.  Returns None if
    nothing primary turned up; over a small field a primary syzygy may exist
    only after a field extension, so None is not a proof of absence.
    """
    space = space if space is not None else syzygy_space(gens, k)
    if space.dim == 0:
        return None
    ring = gens.ring
    for s in space.basis:
        if is_primary_syzygy(s, ring):
            return s
    if space.dim == 1:
        return None
    rng = random.Random(seed)
    field = ring.field
    for _ in range(trials):
        coeffs = [field.random(rng) for _ in space.basis]
        if all(c == 0 for c in coeffs):
            continue
        entries = []
        for pos in range(gens.n):
            acc = HomPoly.zero(field, max(k - gens.degrees[pos], 0))
            for c, s in zip(coeffs, space.basis):
                if c:
                    acc = acc + s.entries[pos].scale(c)
            entries.append(acc)
        cand = SyzygyVec(tuple(entries), k)
        if is_primary_syzygy(cand, ring):
            return cand
    return None
