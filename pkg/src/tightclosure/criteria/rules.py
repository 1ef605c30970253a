"""Closure rules for R_+-primary ideals on a smooth plane curve.

``IdealAnalysis`` computes the syzygy structure of an ideal once (minimal
syzygy degree, a primary syzygy, semistability, slope bounds) and then
answers, for each degree m, which rules apply.  Each family returns
``DegreeRule`` objects; the engine turns them into verdicts.  Families are
listed in a fixed priority order (see ``IdealAnalysis.families``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import floor

from ..cohomology import opposite_index, pair_ideal, parameter_pairs
from ..curvering import IdealGens
from ..polyspace import HomPoly
from ..syzygy import SyzygyVec, find_primary_syzygy, minimal_syzygy_degree, syzygy_dim, syzygy_space
from .model import Caveat, Certificate, ClassTest, DegreeRule, SlopeBounds, inequality

SEMISTABLE = "Semistable"
STRONGLY_SEMISTABLE = "StronglySemistable"
NOT_SEMISTABLE = "NotSemistable"
DECOMPOSABLE = "Decomposable"
UNKNOWN = "Unknown"


class NotPrimaryError(ValueError):
    pass


def hm_ampleness_rule(ring, sub_degree, quot_degree, nonsplit: bool, p: int):
    """Ampleness test for a rank-two extension 0 -> L -> S -> M -> 0 on the curve.

    Returns (holds, check record).  The bundle is ample when the extension
    does not split, deg L >= 0, deg M > 0 and deg S > 2(g-1)/p (deg S > 0 in
    characteristic zero).
    """
    g = ring.genus
    total = sub_degree + quot_degree
    if p:
        ok, rec = inequality("sub + quot", ">", "2*(g - 1)/p", sub=sub_degree, quot=quot_degree, g=g, p=p)
    else:
        ok, rec = inequality("sub + quot", ">", "0", sub=sub_degree, quot=quot_degree)
    holds = bool(nonsplit and sub_degree >= 0 and quot_degree > 0 and total > 0 and ok)
    record = {
        "check": "hartshorne_mumford",
        "sub_degree": sub_degree,
        "quot_degree": quot_degree,
        "nonsplit": bool(nonsplit),
        "genus": g,
        "p": p,
        "degree_bound": rec,
    }
    return holds, record


def syzygy_check(gens: IdealGens, s: SyzygyVec, primary: bool = True) -> list:
    out = [{"check": "syzygy", "gens": gens.strings(), "entries": s.strings(), "degree": s.degree}]
    if primary:
        out.append({"check": "primary", "entries": [e for e in s.strings() if e != "0"]})
    return out


def no_syzygy_check(gens: IdealGens, k: int) -> dict:
    return {"check": "syzygy_dim", "gens": gens.strings(), "degree": k, "dim": 0}


def pure_power_exponent(gens: IdealGens):
    """a if the generators are nonzero multiples of x^a, y^a, z^a in some order."""
    if gens.n != 3:
        return None
    info = [f.is_pure_power() for f in gens.polys]
    if any(i is None for i in info):
        return None
    if sorted(v for v, _ in info) != [0, 1, 2] or len({e for _, e in info}) != 1:
        return None
    return info[0][1]


def is_diagonal(F: HomPoly) -> bool:
    d = F.degree
    return set(F.terms) == {(d, 0, 0), (0, d, 0), (0, 0, d)}


def _frac(x) -> Fraction:
    return Fraction(x)


class IdealAnalysis:
    """Syzygy structure and closure rules of one ideal."""

    def __init__(self, gens: IdealGens, *, seed: int = 0, trials: int = 20, e_max: int = 3,
                 budget: int = 25000, use_pullback: bool = True, check_primary: bool = True):
        if gens.n < 2:
            raise NotPrimaryError("a principal ideal is never R_+-primary in dimension two")
        if check_primary and not gens.primary:
            raise NotPrimaryError("the generators have a common zero on the curve; the ideal is not R_+-primary")
        self.gens = gens
        self.ring = gens.ring
        self.p = self.ring.field.p
        self.delta = self.ring.delta
        self.genus = self.ring.genus
        self.n = gens.n
        self.D = gens.degree_sum
        self.seed = seed
        self.trials = trials
        self.e_max = e_max
        self.budget = budget
        self.use_pullback = use_pullback and self.p > 0
        self.notes = []
        self._pullbacks = {}

    # structure
    @cached_property
    def k0(self):
        return minimal_syzygy_degree(self.gens, self.D)

    @cached_property
    def k0_space(self):
        return syzygy_space(self.gens, self.k0) if self.k0 is not None else None

    @cached_property
    def primary(self):
        """(degree, primary syzygy) with the least degree found, or None.

        Below the middle degree D/2 only the minimal degree can carry a primary
        syzygy, so the search starts at k0 and moves up only while k > D/2.
        """
        if self.n != 3 or self.k0 is None:
            return None
        k = self.k0
        s = find_primary_syzygy(self.gens, k, self.trials, self.seed, space=self.k0_space)
        if s is not None:
            return k, s
        limit = min(self.D, max(k, (self.D + 1) // 2) + 2)
        for k in range(max(self.k0 + 1, (self.D + 1) // 2), limit + 1):
            s = find_primary_syzygy(self.gens, k, self.trials, self.seed)
            if s is not None:
                return k, s
        return None

    @cached_property
    def pairs(self):
        return parameter_pairs(self.gens) if self.n == 3 else ()

    @cached_property
    def xa(self):
        return pure_power_exponent(self.gens)

    @cached_property
    def diagonal(self) -> bool:
        return is_diagonal(self.ring.F)

    @cached_property
    def semistability(self):
        return semistability_certificate(self)

    @cached_property
    def slope(self) -> SlopeBounds | None:
        return slope_bounds(self)

    # rule families in priority order
    def families(self):
        cheap = [
            ("regular-ring", self.regular_ring_rules),
            ("parameter-ideal", self.parameter_rules),
            ("primary-syzygy", self.primary_rules),
            ("semistable-bundle", self.semistable_rules),
            ("pure-powers", self.pure_power_rules),
            ("slope", self.slope_rules),
            ("no-syzygy-bounds", self.bound_rules),
            ("degree-bounds", self.degree_bound_rules),
        ]
        expensive = [("frobenius-pullback", self.pullback_rules)] if self.use_pullback else []
        return cheap, expensive

    def family_names(self) -> list:
        cheap, expensive = self.families()
        return [n for n, _ in cheap + expensive] + (["frobenius-oracle"] if self.p else [])

    # families
    def regular_ring_rules(self, m):
        if self.delta != 1:
            return []
        cert = Certificate(
            "regular-ring",
            "the curve is a line, R is a polynomial ring and every ideal is closed",
            ({"check": "curve_degree", "delta": 1},),
        )
        return [DegreeRule("IffIdeal", Caveat.DEFINITE, cert)]

    def parameter_rules(self, m):
        if self.n != 2:
            return []
        d1, d2 = self.gens.degrees
        base = ({"check": "parameters", "polys": self.gens.strings()},)
        ok, rec = inequality("m", ">=", "d1 + d2", m=m, d1=d1, d2=d2)
        if ok:
            cert = Certificate(
                "parameter-ideal/inclusion",
                "R_m lies in the closure of a parameter ideal once m >= d1 + d2",
                base + (rec,),
            )
            return [DegreeRule("AllIn", Caveat.DEFINITE, cert)]
        _, rec = inequality("m", "<", "d1 + d2", m=m, d1=d1, d2=d2)
        hm_ok, hm = hm_ampleness_rule(self.ring, 0, (d1 + d2 - m) * self.delta, True, self.p)
        caveat = Caveat.DEFINITE if (self.p and hm_ok) else Caveat.CHAR0_OR_LARGE_P
        cert = Certificate(
            "parameter-ideal/exclusion",
            "below degree d1 + d2 the closure of a parameter ideal adds nothing; "
            "in positive characteristic this is proven when the forcing extension is ample",
            base + (rec,) + ((hm,) if hm_ok else ()),
        )
        return [DegreeRule("IffIdeal", caveat, cert)]

    def primary_rules(self, m):
        if self.n != 3 or self.primary is None:
            return []
        k, s = self.primary
        return primary_window_rules(self, s, k, m)

    def semistable_rules(self, m):
        if self.n != 3:
            return []
        status, cert = self.semistability
        if status not in (SEMISTABLE, STRONGLY_SEMISTABLE):
            return []
        ok, rec = inequality("2*m", ">=", "D", m=m, D=self.D)
        if not ok:
            _, rec = inequality("2*m", "<", "D", m=m, D=self.D)
        if status == SEMISTABLE:
            rule = "semistable-bundle/" + ("inclusion" if ok else "exclusion")
            statement = "with a semistable syzygy bundle the closure is the ideal plus R_{>=D/2} (characteristic zero)"
            return [DegreeRule("AllIn" if ok else "IffIdeal", Caveat.CHAR0_ONLY,
                               Certificate(rule, statement, cert.checks + (rec,)))]
        if ok:
            statement = "with a strongly semistable syzygy bundle R_m lies in the closure for m >= D/2"
            return [DegreeRule("AllIn", Caveat.DEFINITE,
                               Certificate("strongly-semistable/inclusion", statement, cert.checks + (rec,)))]
        statement = "with a strongly semistable syzygy bundle nothing below D/2 is added to the ideal"
        return [DegreeRule("IffIdeal", Caveat.CHAR0_OR_LARGE_P,
                           Certificate("strongly-semistable/exclusion", statement, cert.checks + (rec,)))]

    def pure_power_rules(self, m):
        a = self.xa
        if a is None:
            return []
        return pure_power_rules(self, a, m)

    def slope_rules(self, m):
        sb = self.slope
        if sb is None:
            return []
        out = []
        base = tuple(sb_checks(self, sb))
        if sb.mu_max_upper is not None:
            ok, rec = inequality("m*delta", ">=", "U", m=m, delta=self.delta, U=sb.mu_max_upper)
            if ok:
                out.append(DegreeRule("AllIn", Caveat.CHAR0_ONLY, Certificate(
                    "slope/inclusion",
                    "deg f0 >= (upper bound for the maximal slope)/delta puts f0 in the closure",
                    base + (rec,))))
        if sb.mu_min_lower is not None:
            ok, rec = inequality("m*delta", "<", "L", m=m, delta=self.delta, L=sb.mu_min_lower)
            if ok:
                out.append(DegreeRule("IffIdeal", Caveat.CHAR0_OR_LARGE_P, Certificate(
                    "slope/exclusion",
                    "deg f0 < (lower bound for the minimal slope)/delta leaves only ideal members in the closure",
                    base + (rec,))))
        return out

    def bound_rules(self, m):
        if self.k0 is None:
            return []
        out = []
        g, delta, D, n = self.genus, self.delta, self.D, self.n
        k = self.k0 - 1
        if n == 3:
            kk = min(k, floor(Fraction(D, 2) + Fraction(g - 1, delta)))
            if kk >= 0:
                ok, rec = inequality("m", ">=", "D - k + (g - 1)/delta", m=m, D=D, k=kk, g=g, delta=delta)
                if ok:
                    out.append(DegreeRule("AllIn", Caveat.CHAR0_ONLY, Certificate(
                        "no-syzygy/inclusion",
                        "no syzygy of degree k <= D/2 + (g-1)/delta gives R_m in the closure for m >= D - k + (g-1)/delta",
                        (no_syzygy_check(self.gens, kk), rec))))
        if k >= 0:
            ok, rec = inequality("m", "<", "k - (2*n - 3)*g/((n - 1)*delta) + 1/delta",
                                 m=m, k=k, n=n, g=g, delta=delta)
            if ok:
                out.append(DegreeRule("IffIdeal", Caveat.CHAR0_ONLY, Certificate(
                    "no-syzygy/exclusion-ample",
                    "no syzygy of degree k makes the dual syzygy bundle ample below k - (2n-3)g/((n-1)delta) + 1/delta",
                    (no_syzygy_check(self.gens, k), rec))))
            ok, rec = inequality("m", "<=", "k - delta + 2", m=m, k=k, delta=delta)
            if ok:
                out.append(DegreeRule("IffIdeal", Caveat.CHAR0_ONLY, Certificate(
                    "no-syzygy/exclusion-coarse",
                    "no syzygy of degree k leaves only ideal members in the closure up to degree k - delta + 2",
                    (no_syzygy_check(self.gens, k), rec))))
        return out

    def degree_bound_rules(self, m):
        degs = self.gens.degrees
        out = []
        ok, rec = inequality("m", ">=", "T", m=m, T=min(2 * max(degs), sum(degs)))
        if ok:
            out.append(DegreeRule("AllIn", Caveat.DEFINITE, Certificate(
                "degree-bound/upper",
                "R_m lies in the closure for m >= min(2 max d_i, sum d_i)",
                ({"check": "degrees", "gens": self.gens.strings()}, rec))))
        ok, rec = inequality("m", "<=", "T", m=m, T=min(degs))
        if ok:
            out.append(DegreeRule("IffIdeal", Caveat.DEFINITE, Certificate(
                "degree-bound/lower",
                "an element of degree <= min d_i is in the closure only if it is in the ideal",
                ({"check": "degrees", "gens": self.gens.strings()}, rec))))
        return out

    def pullback_rules(self, m):
        from ..frobenius import BudgetExceeded, frobenius_pullback_problem

        out = []
        for e in range(1, self.e_max + 1):
            q = self.p ** e
            if e not in self._pullbacks:
                try:
                    prob = frobenius_pullback_problem(self.gens, e, budget=self.budget)
                    sub = IdealAnalysis(prob.pulled, seed=self.seed, trials=self.trials,
                                        use_pullback=False, check_primary=False)
                    prim = sub.primary if sub.n == 3 else None
                    self._pullbacks[e] = (sub, prim)
                except BudgetExceeded as exc:
                    self.notes.append(f"pull-back with e={e} skipped: {exc}")
                    self._pullbacks[e] = None
            entry = self._pullbacks[e]
            if entry is None:
                break
            sub, prim = entry
            if prim is None:
                continue
            k, s = prim
            for rule in primary_window_rules(sub, s, k, m * q, q=q):
                if rule.kind == "IffIdeal":
                    # a conditional statement about the pulled-back ideal says nothing here
                    continue
                cert = rule.certificate
                cert = Certificate(
                    f"frobenius-pullback(e={e})/" + cert.rule,
                    f"apply to f^{q} and the generators raised to the power {q}: " + cert.statement,
                    ({"check": "frobenius_pullback", "e": e, "q": q, "gens": self.gens.strings()},) + cert.checks,
                )
                out.append(DegreeRule(rule.kind, rule.caveat, cert, rule.test, q))
            if out and any(r.caveat.valid_at(self.p) for r in out):
                break
        return out


def primary_window_rules(an: IdealAnalysis, s: SyzygyVec, k: int, m: int, q: int = 1):
    """Rules coming from the sequence 0 -> O(m-k) -> Syz(m) -> O(m+k-D) -> 0 of a primary syzygy.

    ``an`` describes the ideal the syzygy belongs to; for a Frobenius pull-back
    this is the pulled-back ideal and m is the pulled-back degree.
    """
    D, delta, p = an.D, an.delta, an.p
    base = tuple(syzygy_check(an.gens, s))
    hi, lo = max(k, D - k), min(k, D - k)
    plus = Caveat.ALSO_PLUS if p else Caveat.DEFINITE
    if m >= hi:
        if 2 * k == D:
            rule = "primary-syzygy/strongly-semistable"
            statement = "a primary syzygy in the middle degree D/2 makes the syzygy bundle strongly semistable; R_m is in the closure for m >= D/2"
        elif 2 * k > D:
            rule = "primary-syzygy/inclusion-above-middle"
            statement = "a primary syzygy of degree k >= D/2 puts R_m in the closure for m >= k"
        else:
            rule = "primary-syzygy/inclusion-below-middle"
            statement = "a primary syzygy of degree k <= D/2 puts R_m in the closure for m >= D - k"
        _, rec = inequality("m", ">=", "k" if 2 * k >= D else "D - k", m=m, k=k, D=D)
        return [DegreeRule("AllIn", plus, Certificate(rule, statement, base + (rec,)))]
    if m < lo:
        _, rec = inequality("m", "<", "k" if 2 * k <= D else "D - k", m=m, k=k, D=D)
        return [DegreeRule("IffIdeal", Caveat.CHAR0_OR_LARGE_P, Certificate(
            "primary-syzygy/exclusion-below",
            "a primary syzygy of degree k leaves only ideal members in the closure for m < min(k, D - k)",
            base + (rec,)))]
    if 2 * k > D:
        return []
    if not an.pairs:
        an.notes.append("no two generators form a system of parameters; the class test is unavailable")
        return []
    pair = an.pairs[0]
    l = opposite_index(pair)
    hm_ok, hm = hm_ampleness_rule(an.ring, 0, (D - k - m) * delta, True, p)
    excl = Caveat.DEFINITE if (p and hm_ok) else Caveat.CHAR0_OR_LARGE_P
    _, rec = inequality("k", "<=", "m", m=m, k=k)
    _, rec2 = inequality("m", "<", "D - k", m=m, k=k, D=D)
    test = ClassTest(pair, pair_ideal(an.gens, pair), s.entries[l], q, plus, excl, hm if hm_ok else None)
    cert = Certificate(
        "primary-syzygy/class-test",
        "for k <= m < D - k an element is in the closure exactly when its class vanishes in H^1(O(m + k - D))",
        base + ({"check": "parameters", "polys": [str(an.gens.reduced[pair[0]]), str(an.gens.reduced[pair[1]])]},
                rec, rec2),
    )
    return [DegreeRule("ClassTest", excl, cert, test, q)]


def semistability_certificate(an: IdealAnalysis):
    """Classify the syzygy bundle of three generators as far as the data allows.

    Checked in this order: a syzygy far below the middle degree (split), a
    syzygy below the middle (not semistable), a primary syzygy in the middle
    degree (strongly semistable), no syzygy at or above D/2 + (g-1)/delta
    (semistable), and two lookups for pure powers.
    """
    gens, D, delta, g = an.gens, an.D, an.delta, an.genus
    k0 = an.k0
    if an.n != 3:
        return UNKNOWN, Certificate("semistability/unknown", "only three generators are classified")
    half = Fraction(D, 2)
    if k0 is not None and k0 < half:
        base = (no_syzygy_check(gens, k0 - 1), {"check": "syzygy_dim_positive", "gens": gens.strings(), "degree": k0})
        ok, rec = inequality("k", "<", "D/2 - (g - 1)/delta", k=k0, D=D, g=g, delta=delta)
        if ok:
            return DECOMPOSABLE, Certificate(
                "semistability/decomposable",
                "a syzygy of degree k < D/2 - (g-1)/delta splits the syzygy bundle",
                base + (rec,))
        _, rec = inequality("k", "<", "D/2", k=k0, D=D)
        return NOT_SEMISTABLE, Certificate(
            "semistability/not-semistable",
            "a syzygy of degree below D/2 destabilizes the syzygy bundle",
            base + (rec,))
    if k0 is not None and 2 * k0 == D and an.primary is not None and an.primary[0] == k0:
        s = an.primary[1]
        return STRONGLY_SEMISTABLE, Certificate(
            "semistability/strongly-semistable",
            "a primary syzygy of degree D/2 gives an extension of two degree-zero line bundles",
            tuple(syzygy_check(gens, s)))
    if k0 is not None:
        ok, rec = inequality("k", ">=", "D/2 + (g - 1)/delta", k=k0 - 1, D=D, g=g, delta=delta)
        if ok:
            return SEMISTABLE, Certificate(
                "semistability/no-syzygy-above-middle",
                "no syzygy in a degree k >= D/2 + (g-1)/delta forces semistability",
                (no_syzygy_check(gens, k0 - 1), rec))
    a = an.xa
    if a is not None:
        ok, rec = inequality("delta", ">=", "3*a - 1", delta=delta, a=a)
        if ok:
            return SEMISTABLE, Certificate(
                "semistability/pure-powers",
                "the syzygy bundle of x^a, y^a, z^a is semistable when delta >= 3a - 1",
                ({"check": "pure_powers", "gens": gens.strings(), "a": a}, rec))
        if a == 2 and delta == 4:
            return SEMISTABLE, Certificate(
                "semistability/squares-on-quartic",
                "the syzygy bundle of x^2, y^2, z^2 on a smooth quartic is semistable",
                ({"check": "pure_powers", "gens": gens.strings(), "a": 2}, {"check": "curve_degree", "delta": 4}))
    return UNKNOWN, Certificate("semistability/unknown", "no criterion applied",
                                ({"check": "note", "minimal_syzygy_degree": k0},))


def slope_bounds(an: IdealAnalysis) -> SlopeBounds | None:
    """Bounds for mu_max and mu_min of the dual of Syz(0), for three generators."""
    if an.n != 3 or an.k0 is None:
        return None
    D, delta, g = an.D, an.delta, an.genus
    mu = Fraction(D * delta, 2)
    status, _ = an.semistability
    if status in (SEMISTABLE, STRONGLY_SEMISTABLE):
        return SlopeBounds(mu, mu, mu, "semistable", an.k0, True)
    if an.primary is not None and 2 * an.primary[0] <= D:
        k = an.primary[0]
        return SlopeBounds(mu, _frac((D - k) * delta), _frac(k * delta), "primary-syzygy", k, True)
    k = an.k0 - 1
    upper = max(_frac((D - k) * delta + g - 1), mu)
    lower = min(_frac(k * delta - g + 1), mu)
    return SlopeBounds(mu, upper, lower, "no-syzygy", k, False)


def sb_checks(an: IdealAnalysis, sb: SlopeBounds):
    if sb.source == "semistable":
        return list(an.semistability[1].checks)
    if sb.source == "primary-syzygy":
        return syzygy_check(an.gens, an.primary[1])
    return [no_syzygy_check(an.gens, sb.source_degree),
            {"check": "slope_bound", "k": sb.source_degree, "D": an.D, "delta": an.delta, "genus": an.genus,
             "mu_max_upper": str(sb.mu_max_upper), "mu_min_lower": str(sb.mu_min_lower)}]


def _diagonal_syzygy(an: IdealAnalysis, a: int, q: int, qq: int):
    """For F = sum c_v v^delta: entries c_v^{qq} / (gen coefficient)^q * v^(delta qq - a q)."""
    field = an.ring.field
    F = an.ring.F
    d = an.delta
    entries = []
    for f in an.gens.polys:
        v, _ = f.is_pure_power()
        mono = [0, 0, 0]
        mono[v] = d
        cF = F.terms[tuple(mono)]
        (cg,) = f.terms.values()
        coeff = field.div(field.power(cF, qq), field.power(cg, q))
        exps = [0, 0, 0]
        exps[v] = d * qq - a * q
        entries.append(HomPoly.monomial(field, exps, coeff))
    return entries


def pure_power_rules(an: IdealAnalysis, a: int, m: int):
    """Rules for (x^a, y^a, z^a)."""
    out = []
    p, delta, g = an.p, an.delta, an.genus
    form = {"check": "pure_powers", "gens": an.gens.strings(), "a": a}
    F = an.ring.F
    if a == 2 and delta == 2 and is_diagonal(F):
        out.append(DegreeRule("IffIdeal", Caveat.DEFINITE, Certificate(
            "pure-powers/diagonal-conic",
            "on a diagonal conic the ring is a cone over a rational normal curve and every ideal is closed",
            (form, {"check": "diagonal_curve"}))))
    if a == 2 and delta == 3 and m == 3 and (1, 1, 1) not in F.terms:
        # F = S x^2 + T y^2 + U z^2 with linear S, T, U
        field = an.ring.field
        parts = [dict(), dict(), dict()]
        for mono, c in F.terms.items():
            v = next(i for i in range(3) if mono[i] >= 2)
            rest = list(mono)
            rest[v] -= 2
            parts[v][tuple(rest)] = c
        lin = [HomPoly(field, 1, t, trusted=True) for t in parts]
        if not an.ring.zeroset_empty([x for x in lin if not x.is_zero()] or [HomPoly.zero(field, 1)]):
            out.append(DegreeRule("IffIdeal", Caveat.CHAR0_OR_LARGE_P, Certificate(
                "pure-powers/cubic-nonprimary-square-syzygy",
                "if the syzygy read off from F = S x^2 + T y^2 + U z^2 has a zero on the curve, "
                "the syzygy bundle splits off a negative line bundle and xyz is not in the closure",
                (form, {"check": "nonprimary", "entries": [str(x) for x in lin]}))))
    ok3, rec3 = inequality("delta", ">=", "3*a - 1", delta=delta, a=a)
    if ok3:
        if p:
            ok, rec = inequality("(2*m - 3*a)*delta", ">", "2*(g - 1)/p", m=m, a=a, delta=delta, g=g, p=p)
            if 2 * m > 3 * a and ok:
                out.append(DegreeRule("AllIn", Caveat.FROBENIUS, Certificate(
                    "pure-powers/ample-frobenius",
                    "for delta >= 3a - 1 the semistable bundle Syz(m) is ample once its degree exceeds 2(g-1)/p, "
                    "which puts R_m in the Frobenius closure",
                    (form, rec3, rec))))
        ok, rec = inequality("2*m", "<", "3*a", m=m, a=a)
        if ok:
            out.append(DegreeRule("IffIdeal", Caveat.CHAR0_OR_LARGE_P, Certificate(
                "pure-powers/ample-dual",
                "for delta >= 3a - 1 and m < 3a/2 the dual syzygy bundle is ample",
                (form, rec3, rec))))
    if an.diagonal:
        out.extend(_diagonal_rules(an, a, m, form))
    return out


def _diagonal_rules(an: IdealAnalysis, a: int, m: int, form: dict):
    out = []
    p, delta, g = an.p, an.delta, an.genus
    diag = {"check": "diagonal_curve"}
    # threshold delta * p^j >= 3a/2 with the least possible value
    best = None
    if 2 * delta >= 3 * a:
        best = (1, 1)  # (q, qq) with threshold delta * qq / q
        if p:
            q = p
            while 2 * delta >= 3 * a * q:
                best = (q, 1)
                q *= p
    elif p:
        qq = p
        while 2 * delta * qq < 3 * a:
            qq *= p
        best = (1, qq)
    if best is not None:
        q, qq = best
        ok, rec = inequality("m*q", ">=", "delta*qq", m=m, q=q, qq=qq, delta=delta)
        if ok:
            entries = _diagonal_syzygy(an, a, q, qq)
            check = {"check": "syzygy", "gens": [str(f.frobenius_power(q) if q > 1 else f) for f in an.gens.polys],
                     "entries": [str(e) for e in entries], "degree": delta * qq}
            out.append(DegreeRule("AllIn", Caveat.ALSO_PLUS if p else Caveat.DEFINITE, Certificate(
                "pure-powers/diagonal-frobenius-syzygy",
                "on a diagonal curve the power F^qq gives a primary syzygy for the q-th powers of x^a, y^a, z^a "
                "in degree delta*qq >= 3aq/2, so R_m is in the closure for m*q >= delta*qq",
                (form, diag, check, {"check": "primary", "entries": [str(e) for e in entries]}, rec))))
    if p and not any(n.startswith("not strongly semistable") for n in an.notes):
        q = 1
        while q <= 10**6:
            qq = 1
            while delta * qq < a * q:
                qq *= p
            if 3 * a * q > 2 * delta * qq:
                an.notes.append(
                    f"not strongly semistable: F^{qq} gives a syzygy of degree {delta * qq} below the middle "
                    f"degree {Fraction(3 * a * q, 2)} of the pull-back with q={q}")
                break
            q *= p
    if a == 3 and 5 <= delta <= 7:
        if p:
            hm_ok, hm = hm_ampleness_rule(an.ring, 0, delta, True, p)
        else:
            hm_ok, hm = True, {"check": "characteristic", "p": 0}
        if hm_ok:
            if m >= 5:
                out.append(DegreeRule("AllIn", Caveat.FROBENIUS if p else Caveat.DEFINITE, Certificate(
                    "pure-powers/cubes-syz5-ample",
                    "on a diagonal curve of degree 5, 6 or 7 the bundle Syz(5) of x^3, y^3, z^3 is ample, "
                    "so R_m is in the closure for m >= 5",
                    (form, diag, no_syzygy_check(an.gens, 4), hm))))
            elif delta == 5:
                out.append(DegreeRule("IffIdeal", Caveat.DEFINITE, Certificate(
                    "pure-powers/cubes-quintic-exclusion",
                    "on a diagonal quintic the nonsplit extension 0 -> O -> Syz(5) -> O(1) -> 0 is ample, "
                    "so nothing of degree <= 4 outside the ideal is in the closure",
                    (form, diag, no_syzygy_check(an.gens, 4), hm))))
            else:
                out.append(DegreeRule("IffIdeal", Caveat.CHAR0_OR_LARGE_P, Certificate(
                    "pure-powers/cubes-exclusion",
                    "the dual of Syz(m) is ample for m <= 4 when Syz(5) is ample",
                    (form, diag, no_syzygy_check(an.gens, 4), hm))))
    return out
