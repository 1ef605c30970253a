"""Turn rules into verdicts for single elements and for whole degrees."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import linalg
from ..cohomology import ForcingClass, class_kernel, class_vanishes_for, make_forcing_class
from ..curvering import IdealGens, ideal_membership, quotient_basis
from ..frobenius import IN_FROBENIUS_CLOSURE, frobenius_closure_lower_bound
from ..polyspace import HomPoly
from ..syzygy import syzygy_dim
from .model import (
    Caveat,
    Certificate,
    DegreeRule,
    DegreeStatus,
    RuleConflictError,
    Status,
    Verdict,
    contradicts,
)
from .rules import IdealAnalysis


def evaluate_rule(rule: DegreeRule, f0: HomPoly, an: IdealAnalysis) -> Verdict:
    """Verdict of one degree rule for an element f0 that is not in the ideal."""
    cert = rule.certificate
    if rule.kind == "AllIn":
        return Verdict(Status.IN_CLOSURE, rule.caveat, cert)
    if rule.kind == "IffIdeal":
        return Verdict(Status.NOT_IN_CLOSURE, rule.caveat,
                       cert.extended({"check": "nonmembership", "element": str(f0), "gens": an.gens.strings()}))
    t = rule.test
    vanishes, _ = class_vanishes_for(an.ring, t.pair_gens, t.multiplier, f0, t.q)
    check = {
        "check": "class",
        "element": str(f0),
        "q": t.q,
        "multiplier": str(t.multiplier),
        "pair": t.pair_gens.strings(),
        "vanishes": vanishes,
    }
    if vanishes:
        return Verdict(Status.IN_CLOSURE, t.inclusion_caveat, cert.extended(check))
    extra = (check, t.hm_check) if t.hm_check else (check,)
    return Verdict(Status.NOT_IN_CLOSURE, t.exclusion_caveat, cert.extended(*extra))


def _first(verdicts, p):
    for v in verdicts:
        if v.valid_at(p):
            return v
    for v in verdicts:
        if v.status != Status.UNKNOWN:
            return v
    return None


def _check_conflicts(verdicts, p):
    for i, a in enumerate(verdicts):
        for b in verdicts[i + 1:]:
            if contradicts(a, b, p):
                raise RuleConflictError(
                    f"rules {a.certificate.rule} ({a.status.value}) and {b.certificate.rule} ({b.status.value}) disagree"
                )


@dataclass
class DecisionReport:
    element: str
    degree: int
    verdict: Verdict
    fired: list
    diagnostics: list
    oracle: dict | None = None

    def to_json(self, p: int) -> dict:
        return {
            "element": self.element,
            "degree": self.degree,
            "verdict": self.verdict.to_json(p),
            "certificate": self.verdict.certificate.to_json() if self.verdict.certificate else None,
            "fired": [dict(v.to_json(p), certificate=v.certificate.to_json()) for v in self.fired],
            "diagnostics": list(self.diagnostics),
            "oracle": self.oracle,
        }


@dataclass
class ElementVerdict:
    element: str
    poly: HomPoly
    verdict: Verdict

    def to_json(self, p) -> dict:
        return dict(self.verdict.to_json(p), element=self.element)


@dataclass
class DegreeRow:
    m: int
    dim_R: int
    dim_ideal: int
    closure_dim: int | None
    status: DegreeStatus
    caveat: Caveat | None
    valid: bool
    certificate: Certificate | None
    p: int
    elements: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "dim_R": self.dim_R,
            "dim_ideal": self.dim_ideal,
            "closure_dim": self.closure_dim,
            "status": self.status.value,
            "caveat": self.caveat.value if self.caveat else None,
            "caveat_text": self.caveat.text if self.caveat else None,
            "valid": self.valid,
            "rule": self.certificate.rule if self.certificate else None,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "elements": [e.to_json(self.p) for e in self.elements],
            "notes": list(self.notes),
        }


@dataclass
class ProfileReport:
    rows: list
    structure_certificates: list
    notes: list

    def row(self, m) -> DegreeRow:
        for r in self.rows:
            if r.m == m:
                return r
        raise KeyError(m)


@dataclass
class _Outcome:
    rule: DegreeRule
    closure_dim: int
    status: DegreeStatus
    caveat: Caveat
    valid: bool
    kernel: list | None = None


class Engine:
    """Decision procedures for one ideal; caches the syzygy analysis between calls."""

    def __init__(self, gens: IdealGens, *, seed: int = 0, trials: int = 20, e_max: int = 3,
                 budget: int = 25000, use_pullback: bool = True, use_oracle: bool = True):
        self.gens = gens
        self.ring = gens.ring
        self.p = self.ring.field.p
        self.analysis = IdealAnalysis(gens, seed=seed, trials=trials, e_max=e_max, budget=budget,
                                      use_pullback=use_pullback)
        self.e_max = e_max
        self.budget = budget
        self.use_oracle = use_oracle and self.p > 0

    # single elements
    def rules_at(self, m: int, expensive: bool = False) -> list:
        cheap, costly = self.analysis.families()
        fams = costly if expensive else cheap
        out = []
        for _, fam in fams:
            out.extend(fam(m))
        return out

    def decide(self, f0: HomPoly) -> DecisionReport:
        ring, p = self.ring, self.p
        ring._check_field(f0)
        inside, mult = ideal_membership(self.gens, f0)
        if inside:
            cert = Certificate("ideal-membership", "f0 is a combination of the generators", ({
                "check": "membership",
                "element": str(f0),
                "gens": self.gens.strings(),
                "multipliers": [str(h) for h in mult],
            },))
            v = Verdict(Status.IN_IDEAL, Caveat.DEFINITE, cert)
            return DecisionReport(str(f0), f0.degree, v, [v], [])
        an = self.analysis
        m = f0.degree
        fired = [evaluate_rule(r, f0, an) for r in self.rules_at(m)]
        if not any(v.valid_at(p) for v in fired):
            fired += [evaluate_rule(r, f0, an) for r in self.rules_at(m, expensive=True)]
        oracle = None
        if self.use_oracle and not any(v.valid_at(p) for v in fired):
            res = frobenius_closure_lower_bound(self.gens, f0, self.e_max, self.budget)
            oracle = res.to_json()
            if res.status == IN_FROBENIUS_CLOSURE:
                cert = Certificate(
                    "frobenius-oracle",
                    "f0^q lies in the ideal generated by the q-th powers of the generators",
                    ({"check": "frobenius_membership", "element": str(f0), "gens": self.gens.strings(),
                      "q": p ** res.exponent},),
                )
                fired.append(Verdict(Status.IN_CLOSURE, Caveat.FROBENIUS, cert))
        _check_conflicts(fired, p)
        chosen = _first(fired, p)
        diagnostics = list(an.notes)
        if chosen is None:
            diagnostics.append(
                f"no rule applies in degree {m}; minimal syzygy degree {an.k0}; "
                f"families tried: {', '.join(an.family_names())}"
            )
            chosen = Verdict(Status.UNKNOWN, None, None, diagnostic=diagnostics[-1])
        return DecisionReport(str(f0), m, chosen, fired, diagnostics, oracle)

    # whole degrees
    def _outcome(self, rule: DegreeRule, m: int, dim_R: int, dim_I: int) -> _Outcome:
        p = self.p
        if rule.kind == "AllIn":
            return _Outcome(rule, dim_R, DegreeStatus.ALL_IN, rule.caveat, rule.caveat.valid_at(p))
        if rule.kind == "IffIdeal":
            return _Outcome(rule, dim_I, DegreeStatus.IFF_IDEAL, rule.caveat, rule.caveat.valid_at(p))
        t = rule.test
        kernel = class_kernel(self.ring, t.pair_gens, t.multiplier, m, t.q)
        dim = len(kernel)
        inc, exc = t.inclusion_caveat, t.exclusion_caveat
        if dim == dim_R:
            return _Outcome(rule, dim, DegreeStatus.ALL_IN, inc, inc.valid_at(p), kernel)
        if dim == dim_I:
            return _Outcome(rule, dim, DegreeStatus.IFF_IDEAL, exc, exc.valid_at(p), kernel)
        both = inc.valid_at(p) and exc.valid_at(p)
        return _Outcome(rule, dim, DegreeStatus.ELEMENT_WISE, exc if not exc.valid_at(p) else inc, both, kernel)

    def degree_row(self, m: int) -> DegreeRow:
        ring, p, an = self.ring, self.p, self.analysis
        dim_R = ring.hilbert_dim(m)
        dim_I = self.gens.piece(m).dim
        basis = quotient_basis(self.gens, m)
        polys = [HomPoly.monomial(ring.field, mono) for mono in basis]
        if not basis:
            cert = Certificate("ideal-contains-degree", "the ideal contains all of R_m",
                               ({"check": "ideal_dim", "gens": self.gens.strings(), "degree": m, "dim": dim_R},))
            return DegreeRow(m, dim_R, dim_I, dim_R, DegreeStatus.ALL_IN, Caveat.DEFINITE, True, cert, p)
        outcomes = [self._outcome(r, m, dim_R, dim_I) for r in self.rules_at(m)]
        if not any(o.valid for o in outcomes):
            outcomes += [self._outcome(r, m, dim_R, dim_I) for r in self.rules_at(m, expensive=True)]
        valid = [o for o in outcomes if o.valid]
        for o in valid[1:]:
            if o.closure_dim != valid[0].closure_dim:
                raise RuleConflictError(
                    f"degree {m}: {valid[0].rule.certificate.rule} gives closure dimension "
                    f"{valid[0].closure_dim}, {o.rule.certificate.rule} gives {o.closure_dim}"
                )
        notes = list(an.notes)
        chosen = valid[0] if valid else (outcomes[0] if outcomes else None)
        elements = []
        if chosen is not None and chosen.valid:
            for f0 in polys:
                elements.append(ElementVerdict(str(f0), f0, evaluate_rule(chosen.rule, f0, an)))
            return DegreeRow(m, dim_R, dim_I, chosen.closure_dim, chosen.status, chosen.caveat, True,
                             chosen.rule.certificate, p, elements, notes)
        # nothing proven at this characteristic: ask the Frobenius oracle element by element
        oracle_hits = 0
        for f0 in polys:
            v = evaluate_rule(chosen.rule, f0, an) if chosen is not None else Verdict(Status.UNKNOWN)
            if self.use_oracle:
                res = frobenius_closure_lower_bound(self.gens, f0, self.e_max, self.budget)
                if res.status == IN_FROBENIUS_CLOSURE:
                    oracle_hits += 1
                    v = Verdict(Status.IN_CLOSURE, Caveat.FROBENIUS, Certificate(
                        "frobenius-oracle",
                        "f0^q lies in the ideal generated by the q-th powers of the generators",
                        ({"check": "frobenius_membership", "element": str(f0), "gens": self.gens.strings(),
                          "q": p ** res.exponent},)))
                elif res.budget_hit is not None:
                    notes.append(f"oracle budget reached for {f0} at e={res.budget_hit}")
            elements.append(ElementVerdict(str(f0), f0, v))
        if polys and oracle_hits == len(polys):
            cert = Certificate("frobenius-oracle", "every basis element of R_m / I_m lies in the Frobenius closure",
                               tuple(c for e in elements for c in e.verdict.certificate.checks))
            return DegreeRow(m, dim_R, dim_I, dim_R, DegreeStatus.ALL_IN, Caveat.FROBENIUS, True, cert, p,
                             elements, notes)
        if oracle_hits and chosen is not None and chosen.status == DegreeStatus.IFF_IDEAL:
            notes.append("the Frobenius oracle contradicts the conditional rule at this characteristic")
            chosen = None
        if chosen is None:
            status = DegreeStatus.ELEMENT_WISE if oracle_hits else DegreeStatus.UNKNOWN
            notes.append(f"no rule applies in degree {m}; minimal syzygy degree {an.k0}")
            return DegreeRow(m, dim_R, dim_I, None, status, None, False, None, p, elements, notes)
        return DegreeRow(m, dim_R, dim_I, chosen.closure_dim, chosen.status, chosen.caveat, False,
                         chosen.rule.certificate, p, elements, notes)

    def structure_certificates(self) -> list:
        an = self.analysis
        out = []
        if an.n == 3:
            out.append(an.semistability[1])
            if an.primary is not None:
                k, s = an.primary
                from .rules import syzygy_check

                out.append(Certificate("primary-syzygy", f"a primary syzygy of degree {k}",
                                       tuple(syzygy_check(self.gens, s))))
                if self.p and 2 * k <= an.D:
                    out.append(Certificate(
                        "plus-closure-agrees",
                        "a primary syzygy of degree <= D/2 makes tight closure and graded plus closure agree",
                        tuple(syzygy_check(self.gens, s))))
        return out

    def profile(self, m_range) -> ProfileReport:
        rows = [self.degree_row(m) for m in m_range]
        return ProfileReport(rows, self.structure_certificates(), list(self.analysis.notes))

    def syzygy_table(self, k_range) -> list:
        from ..syzygy import koszul_dim

        return [{"k": k, "dim": syzygy_dim(self.gens, k), "koszul_dim": koszul_dim(self.gens, k)} for k in k_range]


def decide(fc: ForcingClass, **options) -> DecisionReport:
    return Engine(fc.gens, **options).decide(fc.f0)


def decide_element(gens: IdealGens, f0: HomPoly, **options) -> DecisionReport:
    return Engine(gens, **options).decide(f0)


def degree_profile(gens: IdealGens, m_range=None, **options) -> ProfileReport:
    if m_range is None:
        m_range = range(0, gens.degree_sum + 1)
    return Engine(gens, **options).profile(m_range)


def exact_sequence_decide(fc: ForcingClass, s, k: int | None = None) -> Verdict:
    """Decide membership of f0 using one primary syzygy of three generators."""
    from .rules import primary_window_rules

    gens = fc.gens
    an = IdealAnalysis(gens, use_pullback=False)
    k = s.degree if k is None else k
    inside, _ = ideal_membership(gens, fc.f0)
    if inside:
        return Verdict(Status.IN_IDEAL, Caveat.DEFINITE, Certificate("ideal-membership", "f0 is in the ideal"))
    rules = primary_window_rules(an, s, k, fc.f0.degree)
    if not rules:
        return Verdict(Status.UNKNOWN, diagnostic="degree lies in the window D - k <= m < k where the syzygy decides nothing")
    return evaluate_rule(rules[0], fc.f0, an)


def quotient_rank(vectors, field, ncols) -> int:
    return linalg.rank(vectors, field, ncols) if vectors else 0


__all__ = [
    "Engine",
    "DecisionReport",
    "DegreeRow",
    "ProfileReport",
    "decide",
    "decide_element",
    "degree_profile",
    "exact_sequence_decide",
    "make_forcing_class",
]
