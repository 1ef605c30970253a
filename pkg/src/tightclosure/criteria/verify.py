"""Independent re-check of certificate records.

Every record carries enough data (polynomials as strings, integers,
inequalities) to be recomputed from the curve alone; nothing is taken from
the analysis that produced it.
"""

from __future__ import annotations

from fractions import Fraction

from ..curvering import CurveRing, IdealGens, ideal_membership
from ..polyspace import HomPoly, parse_poly
from ..syzygy import syzygy_dim
from .model import Certificate, check_inequality


class _Checker:
    def __init__(self, ring: CurveRing):
        self.ring = ring
        self.field = ring.field

    def poly(self, text, degree=None) -> HomPoly:
        return parse_poly(text, self.field, degree=degree)

    def gens(self, texts) -> IdealGens:
        return IdealGens(self.ring, [self.poly(t) for t in texts])

    # record kinds
    def syzygy(self, r):
        gens = [self.poly(t) for t in r["gens"]]
        k = r["degree"]
        entries = [self.poly(t, degree=k - g.degree) for t, g in zip(r["entries"], gens)]
        if len(entries) != len(gens) or all(self.ring.is_zero(e) for e in entries):
            return False
        total = HomPoly.zero(self.field, k)
        for e, g in zip(entries, gens):
            if e.degree + g.degree != k:
                return False
            total = total + e * g
        return self.ring.is_zero(total)

    def primary(self, r):
        return self.ring.zeroset_empty([self.poly(t) for t in r["entries"]])

    def nonprimary(self, r):
        polys = [self.poly(t) for t in r["entries"] if t != "0"]
        return bool(polys) and not self.ring.zeroset_empty(polys)

    def parameters(self, r):
        return self.ring.zeroset_empty([self.poly(t) for t in r["polys"]])

    def syzygy_dim(self, r):
        return syzygy_dim(self.gens(r["gens"]), r["degree"]) == r["dim"]

    def syzygy_dim_positive(self, r):
        return syzygy_dim(self.gens(r["gens"]), r["degree"]) > 0

    def inequality(self, r):
        return check_inequality(r)

    def hartshorne_mumford(self, r):
        ok = check_inequality(r["degree_bound"])
        if r["p"] != self.field.p or r["genus"] != self.ring.genus:
            return False
        return bool(ok and r["nonsplit"] and r["sub_degree"] >= 0 and r["quot_degree"] > 0)

    def pure_powers(self, r):
        info = [self.poly(t).is_pure_power() for t in r["gens"]]
        if any(i is None for i in info):
            return False
        return sorted(v for v, _ in info) == [0, 1, 2] and {e for _, e in info} == {r["a"]}

    def diagonal_curve(self, r):
        d = self.ring.delta
        return set(self.ring.F.terms) == {(d, 0, 0), (0, d, 0), (0, 0, d)}

    def curve_degree(self, r):
        return self.ring.delta == r["delta"]

    def characteristic(self, r):
        return self.field.p == r["p"]

    def degrees(self, r):
        return all(not self.ring.is_zero(self.poly(t)) for t in r["gens"])

    def slope_bound(self, r):
        k, D, delta, g = r["k"], r["D"], r["delta"], r["genus"]
        if delta != self.ring.delta or g != self.ring.genus:
            return False
        mu = Fraction(D * delta, 2)
        upper = max(Fraction((D - k) * delta + g - 1), mu)
        lower = min(Fraction(k * delta - g + 1), mu)
        return str(upper) == r["mu_max_upper"] and str(lower) == r["mu_min_lower"]

    def frobenius_pullback(self, r):
        p = self.field.p
        return p > 0 and r["q"] == p ** r["e"]

    def membership(self, r):
        return ideal_membership(self.gens(r["gens"]), self.poly(r["element"]))[0]

    def nonmembership(self, r):
        return not self.membership(r)

    def ideal_dim(self, r):
        return self.gens(r["gens"]).piece(r["degree"]).dim == r["dim"]

    def frobenius_membership(self, r):
        q = r["q"]
        gens = IdealGens(self.ring, [self.poly(t).frobenius_power(q) for t in r["gens"]])
        return ideal_membership(gens, self.poly(r["element"]).frobenius_power(q))[0]

    def class_(self, r):
        q = r["q"]
        f = self.poly(r["element"])
        f = f.frobenius_power(q) if q > 1 else f
        product = self.ring.reduce(f * self.poly(r["multiplier"]))
        inside = ideal_membership(self.gens(r["pair"]), product)[0]
        return inside == r["vanishes"] and self.ring.zeroset_empty([self.poly(t) for t in r["pair"]])

    def note(self, r):
        return True


def verify_record(record: dict, ring: CurveRing) -> bool:
    checker = _Checker(ring)
    kind = record.get("check")
    fn = getattr(checker, "class_" if kind == "class" else kind, None)
    if fn is None or kind.startswith("_"):
        raise ValueError(f"unknown check kind {kind!r}")
    return bool(fn(record))


def verify_certificate(cert: Certificate | dict, ring: CurveRing):
    """Re-run every record; returns (all passed, list of failed records)."""
    checks = cert.checks if isinstance(cert, Certificate) else cert["checks"]
    failed = [r for r in checks if not verify_record(r, ring)]
    return not failed, failed
