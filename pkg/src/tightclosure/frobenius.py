"""Frobenius pull-backs, a Frobenius-power membership oracle, and grid scans.

In characteristic p the q-th power f -> f^q (q = p^e) is additive and fixes
prime field coefficients, so f^q just multiplies every exponent by q.  The
bracket power I^[q] is generated by the q-th powers of the generators.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

from .curvering import CurveRing, IdealGens, ideal_membership, in_piece
from .exactfield import GF, QQ
from .polyspace import HomPoly, num_monomials

DEFAULT_BUDGET = 25000

IN_FROBENIUS_CLOSURE = "InFrobeniusClosure"
INCONCLUSIVE = "Inconclusive"


class BudgetExceeded(RuntimeError):
    pass


def check_budget(degree: int, budget: int = DEFAULT_BUDGET):
    size = num_monomials(degree)
    if size > budget:
        raise BudgetExceeded(f"degree {degree} has {size} monomials, above the budget of {budget}")


def _require_char_p(gens: IdealGens) -> int:
    p = gens.ring.field.p
    if p == 0:
        raise ValueError("Frobenius powers need positive characteristic")
    return p


def bracket_power(gens: IdealGens, q: int) -> IdealGens:
    """The ideal generated by the q-th powers of the generators (cached)."""
    key = ("bracket", q)
    cached = gens.cache.get(key)
    if cached is None:
        cached = IdealGens(gens.ring, [f.frobenius_power(q) for f in gens.polys])
        gens.cache[key] = cached
    return cached


@dataclass
class FrobeniusProblem:
    base: IdealGens
    e: int
    q: int
    pulled: IdealGens

    def pull_element(self, f0: HomPoly) -> HomPoly:
        return f0.frobenius_power(self.q)


def frobenius_pullback_problem(gens: IdealGens, e: int, budget: int = DEFAULT_BUDGET) -> FrobeniusProblem:
    """The problem for (f_i^q) and f0^q.  Raises BudgetExceeded if the syzygy search would be too large."""
    p = _require_char_p(gens)
    if e < 1:
        raise ValueError("e must be at least 1")
    q = p**e
    check_budget(gens.degree_sum * q, budget)
    return FrobeniusProblem(gens, e, q, bracket_power(gens, q))


def frobenius_power_membership(gens: IdealGens, f0: HomPoly, e: int, budget: int = DEFAULT_BUDGET):
    """Decide f0^q in I^[q] for q = p^e (e = 0 is plain membership)."""
    p = _require_char_p(gens)
    if e == 0:
        return ideal_membership(gens, f0)[0]
    q = p**e
    check_budget(f0.degree * q, budget)
    pulled = bracket_power(gens, q)
    ring = gens.ring
    target = f0.frobenius_power(q)
    return in_piece(pulled.piece(target.degree), ring.coords(target), ring.field)


@dataclass
class FrobeniusResult:
    status: str
    exponent: int | None
    tested: list = field(default_factory=list)
    budget_hit: int | None = None

    def to_json(self) -> dict:
        return asdict(self)


def frobenius_closure_lower_bound(gens: IdealGens, f0: HomPoly, e_max: int = 3,
                                  budget: int = DEFAULT_BUDGET) -> FrobeniusResult:
    """Look for q = p^e, e <= e_max, with f0^q in I^[q].

    A hit proves f0 is in the Frobenius closure, hence in the tight closure.
    A miss proves nothing, so there is no negative outcome.
    """
    _require_char_p(gens)
    tested = []
    for e in range(0, e_max + 1):
        try:
            hit = frobenius_power_membership(gens, f0, e, budget)
        except BudgetExceeded:
            return FrobeniusResult(INCONCLUSIVE, None, tested, budget_hit=e)
        tested.append(e)
        if hit:
            return FrobeniusResult(IN_FROBENIUS_CLOSURE, e, tested)
    return FrobeniusResult(INCONCLUSIVE, None, tested)


def fermat_setup(p: int, delta: int, a: int):
    """Ring of x^delta + y^delta + z^delta and the ideal (x^a, y^a, z^a)."""
    field = GF(p) if p else QQ
    F = HomPoly(field, delta, {(delta, 0, 0): 1, (0, delta, 0): 1, (0, 0, delta): 1})
    ring = CurveRing(F)
    gens = IdealGens(ring, [HomPoly.monomial(field, m) for m in ((a, 0, 0), (0, a, 0), (0, 0, a))])
    return ring, gens


@dataclass
class ScanCell:
    p: int
    delta: int
    a: int
    degree_table: list
    certificates: list
    seed: int
    ms: int
    oracle: list = field(default_factory=list)
    contradictions: list = field(default_factory=list)
    partial: bool = False
    skipped: str = ""

    def to_json(self) -> dict:
        return asdict(self)


def scan(ps, deltas, exponents, m_range=None, budget: int = DEFAULT_BUDGET, seed: int = 0,
         e_max: int = 3, out=None, cross_check: bool = True) -> list:
    """Degree profiles of (x^a, y^a, z^a) on Fermat curves over a grid of (p, delta, a).

    Cells with p dividing delta are skipped.  With ``cross_check`` every element
    that receives a definite NotInClosure verdict is also run through the
    Frobenius oracle; an oracle hit is recorded as a contradiction.  If ``out``
    is a writable text stream each cell is written to it as one JSON line.
    """
    from .criteria.engine import Engine

    cells = []
    for p in ps:
        for delta in deltas:
            for a in exponents:
                if p and delta % p == 0:
                    cell = ScanCell(p, delta, a, [], [], seed, 0, skipped="p divides delta")
                    cells.append(cell)
                    if out is not None:
                        out.write(json.dumps(cell.to_json(), sort_keys=True) + "\n")
                    continue
                t0 = time.perf_counter()
                _, gens = fermat_setup(p, delta, a)
                engine = Engine(gens, seed=seed, e_max=e_max, budget=budget)
                lo, hi = m_range if m_range is not None else (0, 3 * a)
                profile = engine.profile(range(lo, hi + 1))
                cell = ScanCell(p, delta, a, [r.to_json() for r in profile.rows],
                                [c.to_json() for c in profile.structure_certificates], seed, 0)
                if cross_check and p:
                    for row in profile.rows:
                        for el in row.elements:
                            v = el.verdict
                            if v.status.value == "NotInClosure" and v.valid_at(p):
                                res = frobenius_closure_lower_bound(gens, el.poly, e_max, budget)
                                cell.oracle.append({"m": row.m, "element": el.element, **res.to_json()})
                                if res.budget_hit is not None:
                                    cell.partial = True
                                if res.status == IN_FROBENIUS_CLOSURE:
                                    cell.contradictions.append({"m": row.m, "element": el.element})
                cell.ms = int((time.perf_counter() - t0) * 1000)
                cells.append(cell)
                if out is not None:
                    out.write(json.dumps(cell.to_json(), sort_keys=True) + "\n")
                    out.flush()
    return cells
