"""Line bundle cohomology, Cech classes and forcing classes on the curve.

On a smooth plane curve Y of degree delta, H^0(Y, O(m)) is R_m and the
canonical sheaf is O(delta - 3), so every dimension here is a Hilbert
function value.  For a parameter pair u, v (no common zero on Y) the class
[h / (u v)] in H^1 vanishes exactly when h lies in (u, v).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .curvering import CurveRing, IdealGens, ideal_membership, in_piece
from .polyspace import HomPoly


def line_bundle_h0(ring: CurveRing, m: int) -> int:
    return ring.hilbert_dim(m)


def line_bundle_h1(ring: CurveRing, m: int) -> int:
    return ring.hilbert_dim(ring.delta - 3 - m)


def riemann_roch_line_bundle(ring: CurveRing, m: int):
    """(h0 - h1, m*delta + 1 - g)."""
    return line_bundle_h0(ring, m) - line_bundle_h1(ring, m), m * ring.delta + 1 - ring.genus


class NotParametersError(ValueError):
    pass


def cech_class_vanishes(ring: CurveRing, h: HomPoly, u: HomPoly, v: HomPoly):
    """Decide whether [h / (u v)] is zero.  Returns (vanishes, multipliers or None)."""
    if not ring.is_parameter_pair(u, v):
        raise NotParametersError(f"{u} and {v} have a common zero on the curve")
    return ideal_membership(IdealGens(ring, [u, v]), h)


@dataclass
class ForcingClass:
    """The class in H^1(Syz(m)) attached to f0 in R_m and the generators."""

    f0: HomPoly
    gens: IdealGens
    parameter_pairs: tuple

    @property
    def degree(self) -> int:
        return self.f0.degree


def parameter_pairs(gens: IdealGens) -> tuple:
    """Index pairs (i, j) of generators without a common zero on the curve."""
    cache = gens.cache.get("parameter_pairs")
    if cache is None:
        ring = gens.ring
        cache = tuple(
            (i, j)
            for i in range(gens.n)
            for j in range(i + 1, gens.n)
            if ring.is_parameter_pair(gens.reduced[i], gens.reduced[j])
        )
        gens.cache["parameter_pairs"] = cache
    return cache


def make_forcing_class(gens: IdealGens, f0: HomPoly) -> ForcingClass:
    gens.ring._check_field(f0)
    return ForcingClass(f0, gens, parameter_pairs(gens))


def forcing_class_zero(fc: ForcingClass):
    """c = 0 iff f0 lies in the ideal."""
    return ideal_membership(fc.gens, fc.f0)


def pair_ideal(gens: IdealGens, pair) -> IdealGens:
    key = ("pair", pair)
    cached = gens.cache.get(key)
    if cached is None:
        cached = IdealGens(gens.ring, [gens.reduced[pair[0]], gens.reduced[pair[1]]])
        gens.cache[key] = cached
    return cached


def opposite_index(pair, n: int = 3) -> int:
    (rest,) = [t for t in range(n) if t not in pair]
    return rest


@dataclass(frozen=True)
class ClassImage:
    vanishes: bool
    pair: tuple
    product: HomPoly  # f0 * g_l, the numerator of the image class
    multipliers: object


def quotient_class_image(fc: ForcingClass, syzygy, pair=None) -> ClassImage:
    """Image of c under Syz(m) -> O(m + k - D) induced by a syzygy of degree k.

    With a parameter pair (i, j) and l the remaining index the image is
    [f0 * g_l / (f_i f_j)], which vanishes iff f0 * g_l is in (f_i, f_j).
    """
    gens = fc.gens
    if gens.n != 3:
        raise ValueError("the quotient class is defined for three generators")
    pairs = (pair,) if pair is not None else fc.parameter_pairs
    if not pairs:
        raise NotParametersError("no two generators form a system of parameters")
    pair = pairs[0]
    ring = gens.ring
    l = opposite_index(pair)
    product = ring.reduce(fc.f0 * syzygy.entries[l])
    ok, mult = ideal_membership(pair_ideal(gens, pair), product)
    return ClassImage(ok, pair, product, mult)


def class_kernel(ring: CurveRing, pair_gens: IdealGens, multiplier: HomPoly, m: int, q: int = 1) -> list:
    """Coordinates (in the standard basis of R_m) of a basis of {f : f^q * g in (u, v)}.

    For q > 1 the map f -> f^q is additive and fixes prime field scalars, so
    on coordinates it is linear over F_p and the kernel is computed exactly.
    """
    basis = ring.standard_basis(m)
    N = m * q + multiplier.degree
    piece = pair_gens.piece(N)
    field = ring.field
    columns = []
    for mono in basis:
        elem = HomPoly.monomial(field, mono)
        if q > 1:
            elem = elem.frobenius_power(q)
        image = ring.coords(elem * multiplier) if N >= 0 else []
        columns.append(_residual(piece, image, field))
    dim = ring.hilbert_dim(N)
    return linalg.column_kernel(columns, field, dim)


def _residual(piece, vec, field):
    vec = list(vec)
    for row, pc in zip(piece.basis, piece.pivots):
        c = vec[pc]
        if c:
            vec = [field.sub(a, field.mul(c, b)) for a, b in zip(vec, row)]
    return vec


def class_vanishes_for(ring: CurveRing, pair_gens: IdealGens, multiplier: HomPoly, f0: HomPoly, q: int = 1):
    """Test [f0^q * g / (u v)] = 0 directly for one element."""
    elem = f0.frobenius_power(q) if q > 1 else f0
    product = ring.reduce(elem * multiplier)
    return in_piece(pair_gens.piece(product.degree), ring.coords(product), ring.field), product


def riemann_roch_check(gens: IdealGens, k: int):
    """(dim Syz_k - dim Syz_{D-k+delta-3}, (2k - D) delta + 2(1 - g)) for three generators."""
    from .syzygy import syzygy_dim

    ring = gens.ring
    D = gens.degree_sum
    lhs = syzygy_dim(gens, k) - syzygy_dim(gens, D - k + ring.delta - 3)
    rhs = (2 * k - D) * ring.delta + 2 * (1 - ring.genus)
    return lhs, rhs
