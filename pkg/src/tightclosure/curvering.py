"""The homogeneous coordinate ring R = K[x,y,z]/(F) of a smooth plane curve.

Elements of R are represented by normal forms modulo F: since {F} is a
Groebner basis, every class has a unique representative supported on the
standard monomials, i.e. those not divisible by the lex-leading monomial of F.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from math import comb

from . import linalg
from .exactfield import FieldSpec
from .polyspace import HomPoly, monomial_basis, monomial_index, num_monomials


class SingularCurveError(ValueError):
    pass


def _emptiness_degree(degrees) -> int:
    """A degree N with (h_1..h_r)_N = S_N whenever the forms have no common zero."""
    degs = sorted(degrees, reverse=True)
    lazard = sum(degs[:3]) - 2
    # one form of smallest degree plus two generic combinations in the top degree
    via_top = degs[-1] + 2 * degs[0] - 2
    return max(0, min(lazard, via_top))


def projective_zeroset_empty(polys) -> bool:
    """True iff the forms have no common zero in P^2 over the algebraic closure."""
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        raise ValueError("need at least one nonzero form")
    field = polys[0].field
    if any(f.degree == 0 for f in polys):
        return True
    if len(polys) < 3:
        return False
    N = _emptiness_degree([f.degree for f in polys])
    rows_dim = num_monomials(N)
    columns = []
    for f in polys:
        for h in monomial_basis(N - f.degree):
            col = {}
            for m, c in f.terms.items():
                col[monomial_index((m[0] + h[0], m[1] + h[1], m[2] + h[2]))] = c
            columns.append(col)
    if len(columns) < rows_dim:
        return False
    dense = [[col.get(i, field.zero) for i in range(rows_dim)] for col in columns]
    return linalg.rank(dense, field, rows_dim) == rows_dim


def smoothness_check(F: HomPoly):
    """Return (is_smooth, reason)."""
    if F.is_zero():
        return False, "the zero polynomial does not define a curve"
    if F.degree == 0:
        return False, "a nonzero constant does not define a curve"
    grad = F.gradient()
    if all(g.is_zero() for g in grad):
        return False, "all partial derivatives vanish identically, so every point is singular"
    if projective_zeroset_empty([F, *grad]):
        return True, "F and its partial derivatives have no common projective zero"
    return False, "F and its partial derivatives have a common projective zero (Jacobian criterion)"


class CurveRing:
    """Graded ring of a smooth plane curve of degree delta."""

    def __init__(self, F: HomPoly, *, check: bool = True):
        if F.is_zero() or F.degree < 1:
            raise SingularCurveError("F must be a nonzero form of positive degree")
        self.F = F
        self.field: FieldSpec = F.field
        self.delta = F.degree
        self.genus = (self.delta - 1) * (self.delta - 2) // 2
        p = self.field.p
        if check:
            if p and self.delta % p == 0:
                ok, reason = smoothness_check(F)
                detail = "the curve is singular: " + reason if not ok else "smoothness cannot be trusted"
                raise SingularCurveError(
                    f"characteristic {p} divides the degree {self.delta}; "
                    f"such curves are refused ({detail})"
                )
            ok, reason = smoothness_check(F)
            if not ok:
                raise SingularCurveError(f"curve {F} is not smooth: {reason}")
        self.lead = F.leading_monomial()
        lc = F.terms[self.lead]
        inv = self.field.inv(lc)
        f = self.field
        # lead == sum of tail terms modulo F
        self.tail = [
            (mm, f.neg(f.mul(c, inv)))
            for mm, c in sorted(F.terms.items(), reverse=True)
            if mm != self.lead
        ]
        self._std = {}
        self._std_index = {}

    def __repr__(self):
        return f"CurveRing({self.F} over {self.field})"

    def describe(self) -> dict:
        return {"curve": str(self.F), "char": self.field.p, "delta": self.delta, "genus": self.genus}

    # standard monomials
    def is_standard(self, m) -> bool:
        a = self.lead
        return m[0] < a[0] or m[1] < a[1] or m[2] < a[2]

    def standard_basis(self, m: int) -> tuple:
        basis = self._std.get(m)
        if basis is None:
            basis = tuple(mm for mm in monomial_basis(m) if self.is_standard(mm))
            self._std[m] = basis
            self._std_index[m] = {mm: i for i, mm in enumerate(basis)}
        return basis

    def standard_index(self, m: int) -> dict:
        self.standard_basis(m)
        return self._std_index[m]

    def hilbert_dim(self, m: int) -> int:
        if m < 0:
            return 0
        return comb(m + 2, 2) - (comb(m - self.delta + 2, 2) if m >= self.delta else 0)

    # normal forms
    def reduce_terms(self, terms: dict) -> dict:
        """Normal form of a dict of terms (all of one degree).  Consumes the dict."""
        a0, a1, a2 = self.lead
        tail = self.tail
        p = self.field.p
        heap = [(-m[0], -m[1], -m[2]) for m in terms if m[0] >= a0 and m[1] >= a1 and m[2] >= a2]
        heapq.heapify(heap)
        while heap:
            key = heapq.heappop(heap)
            m = (-key[0], -key[1], -key[2])
            c = terms.pop(m, 0)
            if not c:
                continue
            q0, q1, q2 = m[0] - a0, m[1] - a1, m[2] - a2
            for (t0, t1, t2), v in tail:
                n = (q0 + t0, q1 + t1, q2 + t2)
                old = terms.get(n)
                if old is None:
                    terms[n] = c * v
                    if n[0] >= a0 and n[1] >= a1 and n[2] >= a2:
                        heapq.heappush(heap, (-n[0], -n[1], -n[2]))
                else:
                    terms[n] = old + c * v
                if p:
                    terms[n] %= p
        return {m: c for m, c in terms.items() if c}

    def reduce(self, f: HomPoly) -> HomPoly:
        self._check_field(f)
        return HomPoly(self.field, f.degree, self.reduce_terms(dict(f.terms)), trusted=True)

    def _check_field(self, f):
        if f.field != self.field:
            raise ValueError(f"polynomial over {f.field} used in a ring over {self.field}")

    def mul(self, f: HomPoly, g: HomPoly) -> HomPoly:
        return self.reduce(f * g)

    def is_zero(self, f: HomPoly) -> bool:
        return not self.reduce(f).terms

    def coords(self, f: HomPoly) -> list:
        """Coordinates of the class of f in the standard basis of R_deg(f)."""
        return self.terms_to_coords(self.reduce_terms(dict(f.terms)), f.degree)

    def terms_to_coords(self, terms: dict, m: int) -> list:
        idx = self.standard_index(m)
        vec = [self.field.zero] * len(idx)
        for mono, c in terms.items():
            vec[idx[mono]] = c
        return vec

    def from_coords(self, m: int, vec) -> HomPoly:
        basis = self.standard_basis(m)
        if len(vec) != len(basis):
            raise ValueError("coordinate vector has the wrong length")
        return HomPoly(self.field, m, {mm: c for mm, c in zip(basis, vec) if c}, trusted=True)

    def multiples(self, f: HomPoly, target: int) -> list:
        """Normal forms of f*h for the standard monomials h of degree target - deg f.

        Built level by level: the image of h is x_v times the image of h/x_v,
        which is again standard, so each step is one cheap reduction.
        """
        t = target - f.degree
        if t < 0:
            return []
        p = self.field.p
        level = {(0, 0, 0): self.reduce_terms(dict(f.terms))}
        for step in range(1, t + 1):
            nxt = {}
            for h in self.standard_basis(step):
                v = 0 if h[0] else (1 if h[1] else 2)
                parent = (h[0] - (v == 0), h[1] - (v == 1), h[2] - (v == 2))
                src = level[parent]
                if v == 0:
                    shifted = {(m[0] + 1, m[1], m[2]): c for m, c in src.items()}
                elif v == 1:
                    shifted = {(m[0], m[1] + 1, m[2]): c for m, c in src.items()}
                else:
                    shifted = {(m[0], m[1], m[2] + 1): c for m, c in src.items()}
                nxt[h] = self.reduce_terms(shifted)
            level = nxt
        return [level[h] for h in self.standard_basis(t)]

    # zero sets on the curve
    def zeroset_empty(self, polys) -> bool:
        """True iff the forms have no common zero on the curve."""
        polys = list(polys)
        if len({g.is_pure_power()[0] for g in polys if g.is_pure_power()}) == 3:
            return True
        reduced = [self.reduce(g) for g in polys]
        reduced = [g for g in reduced if not g.is_zero()]
        if not reduced:
            return False
        if any(g.degree == 0 for g in reduced):
            return True
        if len(reduced) < 2:
            return False
        N = _emptiness_degree([g.degree for g in reduced] + [self.delta])
        dim = self.hilbert_dim(N)
        cols = []
        for g in reduced:
            for terms in self.multiples(g, N):
                cols.append(terms)
        if len(cols) < dim:
            return False
        idx = self.standard_index(N)
        zero = self.field.zero
        dense = []
        for terms in cols:
            row = [zero] * dim
            for mono, c in terms.items():
                row[idx[mono]] = c
            dense.append(row)
        return linalg.rank(dense, self.field, dim) == dim

    def is_parameter_pair(self, f: HomPoly, g: HomPoly) -> bool:
        return self.zeroset_empty([f, g])


def make_curve(F: HomPoly) -> CurveRing:
    return CurveRing(F)


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    basis: tuple  # reduced echelon rows in the standard basis of R_m
    pivots: tuple
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)


class IdealGens:
    """Homogeneous generators f_1..f_n of an ideal of R."""

    def __init__(self, ring: CurveRing, polys):
        polys = list(polys)
        if not polys:
            raise ValueError("an ideal needs at least one generator")
        reduced = []
        for f in polys:
            if not isinstance(f, HomPoly):
                raise TypeError("generators must be HomPoly")
            if f.field != ring.field:
                raise ValueError(f"generator {f} is over {f.field}, the ring is over {ring.field}")
            g = ring.reduce(f)
            if g.is_zero():
                raise ValueError(f"generator {f} is zero in R")
            reduced.append(g)
        self.ring = ring
        self.polys = tuple(polys)
        self.reduced = tuple(reduced)
        self.degrees = tuple(f.degree for f in polys)
        self._columns = {}
        self._pieces = {}
        self.cache = {}

    @property
    def n(self) -> int:
        return len(self.polys)

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    def __repr__(self):
        return "IdealGens(" + ", ".join(str(f) for f in self.polys) + ")"

    def strings(self) -> list:
        return [str(f) for f in self.polys]

    @cached_property
    def primary(self) -> bool:
        """True iff the generators have no common zero on the curve."""
        return self.ring.zeroset_empty(self.reduced)

    def spanning_columns(self, m: int):
        """[(generator index, multiplier monomial, coordinate vector)] spanning I_m."""
        cols = self._columns.get(m)
        if cols is None:
            ring = self.ring
            cols = []
            for i, g in enumerate(self.reduced):
                hs = ring.standard_basis(m - g.degree) if m >= g.degree else ()
                for h, terms in zip(hs, ring.multiples(g, m)):
                    cols.append((i, h, ring.terms_to_coords(terms, m)))
            self._columns[m] = cols
        return cols

    def piece(self, m: int) -> GradedPiece:
        piece = self._pieces.get(m)
        if piece is None:
            dim = self.ring.hilbert_dim(m)
            vecs = [c[2] for c in self.spanning_columns(m)]
            red, pivots = linalg.rref(vecs, self.ring.field, dim) if vecs and dim else ([], [])
            piece = GradedPiece(m, tuple(tuple(r) for r in red), tuple(pivots), dim)
            self._pieces[m] = piece
        return piece


def ideal_graded_piece(gens: IdealGens, m: int) -> GradedPiece:
    return gens.piece(m)


def quotient_basis(gens: IdealGens, m: int) -> list:
    """Standard monomials whose classes form a basis of R_m / I_m."""
    piece = gens.piece(m)
    pivots = set(piece.pivots)
    return [mono for i, mono in enumerate(gens.ring.standard_basis(m)) if i not in pivots]


def in_piece(piece: GradedPiece, vec, field) -> bool:
    """Reduce a coordinate vector against the echelon basis; True if it vanishes."""
    vec = list(vec)
    for row, pc in zip(piece.basis, piece.pivots):
        c = vec[pc]
        if c:
            vec = [field.sub(a, field.mul(c, b)) for a, b in zip(vec, row)]
    return not any(vec)


def ideal_membership(gens: IdealGens, f: HomPoly):
    """Decide f in I.  On success also return multipliers h_i with sum h_i f_i = f in R."""
    ring = gens.ring
    ring._check_field(f)
    m = f.degree
    target = ring.coords(f)
    if not any(target):
        return True, [HomPoly.zero(ring.field, max(m - d, 0)) for d in gens.degrees]
    cols = gens.spanning_columns(m)
    if not cols:
        return False, None
    if not in_piece(gens.piece(m), target, ring.field):
        return False, None
    ok, coeffs = linalg.span_membership(target, [c[2] for c in cols], ring.field)
    if not ok:  # pragma: no cover - echelon test already passed
        return False, None
    mult = [dict() for _ in gens.degrees]
    for (i, h, _), c in zip(cols, coeffs):
        if c:
            mult[i][h] = c
    return True, [
        HomPoly(ring.field, max(m - d, 0), terms, trusted=True) for d, terms in zip(gens.degrees, mult)
    ]
