"""Build curves that carry a prescribed primary syzygy in the middle degree.

Given f = (f1, f2, f3) and g = (g1, g2, g3) without common zeros in P^2 and
deg f_i + deg g_i = k for all i with 2k = sum deg f_i, the form
F = f1 g1 + f2 g2 + f3 g3 makes g a primary syzygy of degree k for f on the
curve F = 0, so the closure of (f) is (f) + R_{>=k}.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..curvering import CurveRing, IdealGens, SingularCurveError, projective_zeroset_empty, smoothness_check
from ..polyspace import HomPoly
from ..syzygy import SyzygyVec
from .model import Caveat


class ConstructionError(ValueError):
    pass


@dataclass
class Construction:
    ring: CurveRing
    gens: IdealGens
    syzygy: SyzygyVec
    k: int
    caveat: Caveat

    @property
    def threshold(self) -> int:
        """Closure is the ideal plus R_m for m >= threshold."""
        return self.k


def bastel_construct(f, g) -> Construction:
    f, g = list(f), list(g)
    if len(f) != 3 or len(g) != 3:
        raise ConstructionError("need three polynomials f and three polynomials g")
    field = f[0].field
    if any(h.field != field for h in f + g):
        raise ConstructionError("all polynomials must live over the same field")
    total = sum(h.degree for h in f)
    if total % 2:
        raise ConstructionError(f"sum of the degrees of f is {total}, which is odd, so no middle degree exists")
    k = total // 2
    for fi, gi in zip(f, g):
        if fi.degree + gi.degree != k:
            raise ConstructionError(
                f"deg {fi} + deg {gi} = {fi.degree + gi.degree}, but every pair must add up to k = {k}"
            )
    if any(h.is_zero() for h in f + g):
        raise ConstructionError("zero polynomial among the inputs")
    if not projective_zeroset_empty(f):
        raise ConstructionError("f has a common zero in P^2")
    if not projective_zeroset_empty(g):
        raise ConstructionError("g has a common zero in P^2")
    F = HomPoly.zero(field, k)
    for fi, gi in zip(f, g):
        F = F + fi * gi
    if F.is_zero():
        raise ConstructionError("f1 g1 + f2 g2 + f3 g3 vanishes")
    ok, reason = smoothness_check(F)
    if not ok:
        raise ConstructionError(f"F = {F} is not smooth: {reason}")
    try:
        ring = CurveRing(F)
    except SingularCurveError as exc:
        raise ConstructionError(str(exc)) from None
    gens = IdealGens(ring, f)
    syz = SyzygyVec(tuple(ring.reduce(gi) for gi in g), k)
    caveat = Caveat.ALSO_PLUS if field.p else Caveat.DEFINITE
    return Construction(ring, gens, syz, k, caveat)
