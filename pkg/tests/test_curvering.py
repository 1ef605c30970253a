import random

import pytest

from conftest import fermat, make, random_poly, random_smooth_curve
from tightclosure import linalg
from tightclosure.curvering import (
    CurveRing,
    IdealGens,
    SingularCurveError,
    ideal_membership,
    projective_zeroset_empty,
    quotient_basis,
    smoothness_check,
)
from tightclosure.exactfield import GF, QQ
from tightclosure.polyspace import HomPoly, monomial_basis, num_monomials, parse_poly, parse_poly_list


def test_invariants():
    assert (fermat(7, 3).delta, fermat(7, 3).genus) == (3, 1)
    R = fermat(3, 7)
    assert (R.delta, R.genus) == (7, 15)


@pytest.mark.parametrize(
    "p,F",
    [(0, "x^2+y^2"), (0, "x*y*z"), (3, "x^3+y^3+z^3"), (5, "x^5+y^5+z^5"), (0, "x^3+y^3")],
)
def test_singular_curves_refused(p, F):
    with pytest.raises(SingularCurveError):
        make(p, F)


def test_p_divides_delta_message():
    with pytest.raises(SingularCurveError, match="divides the degree"):
        make(3, "x^3+y^3+z^3")


def test_smoothness_examples():
    assert smoothness_check(parse_poly("x^4+y^4+z^4", GF(7)))[0]
    assert not smoothness_check(parse_poly("x^7+y^7+z^7", GF(7)))[0]
    assert not smoothness_check(parse_poly("x*y*z", QQ))[0]


def test_hilbert_dims():
    assert fermat(0, 3).hilbert_dim(3) == 9
    assert fermat(0, 5).hilbert_dim(6) == 25
    assert fermat(0, 5).hilbert_dim(0) == 1
    assert fermat(0, 5).hilbert_dim(-2) == 0


def test_hilbert_dim_matches_rank():
    rng = random.Random(1)
    for _ in range(30):
        p = rng.choice([0, 5, 7])
        d = rng.choice([2, 3, 4, 6])
        ring = random_smooth_curve(GF(p) if p else QQ, d, rng)
        m = rng.randint(0, 30)
        # R_m = S_m / F * S_{m-d}: count pivots of the multiples of F
        rows = []
        for h in monomial_basis(m - d):
            prod = ring.F * HomPoly.monomial(ring.field, h)
            rows.append(prod.coords())
        rank = linalg.rank(rows, ring.field, num_monomials(m)) if rows else 0
        assert ring.hilbert_dim(m) == num_monomials(m) - rank
        assert len(ring.standard_basis(m)) == ring.hilbert_dim(m)
        if m >= d - 2:
            assert ring.hilbert_dim(m) == d * m + 1 - ring.genus


def test_normal_form_examples():
    ring = fermat(7, 3)
    assert ring.is_zero(ring.F)
    x, y = HomPoly.variable(ring.field, "x"), HomPoly.variable(ring.field, "y")
    f = x * ring.F + y ** 4
    assert ring.reduce(f) == ring.reduce(y ** 4)


def test_reduce_is_idempotent_and_linear():
    rng = random.Random(2)
    ring = random_smooth_curve(GF(11), 4, rng)
    for _ in range(50):
        d = rng.randint(0, 9)
        f, g = random_poly(ring.field, d, rng), random_poly(ring.field, d, rng)
        rf = ring.reduce(f)
        assert ring.reduce(rf) == rf
        assert all(ring.is_standard(m) for m in rf.terms)
        assert ring.reduce(f + g) == rf + ring.reduce(g)


def test_graded_piece_examples():
    ring, gens = make(0, "x^3+y^3+z^3", "x^2,y^2,z^2")
    assert ring.hilbert_dim(3) == 9
    assert gens.piece(3).dim == 8
    assert quotient_basis(gens, 3) == [(1, 1, 1)]
    assert gens.piece(1).dim == 0
    ring, lin = make(0, "x^3+y^3+z^3", "x,y,z")
    assert lin.piece(1).dim == 3


def test_membership_examples():
    ring, gens = make(0, "x^3+y^3+z^3", "x^2,y^2,z^2")
    assert ideal_membership(gens, parse_poly("x*y*z", QQ))[0] is False
    ok, mult = ideal_membership(gens, parse_poly("x^3+2*x^2*y", QQ))
    assert ok
    total = HomPoly.zero(QQ, 3)
    for h, f in zip(mult, gens.polys):
        total = total + h * f
    assert ring.is_zero(total - parse_poly("x^3+2*x^2*y", QQ))


def test_membership_monotone():
    rng = random.Random(4)
    ring, gens = make(5, "x^4+y^4+z^4", "x^3,y^3+x*z^2,z^3")
    for _ in range(60):
        m = rng.randint(3, 7)
        f = random_poly(ring.field, m, rng, density=0.5)
        if ideal_membership(gens, f)[0]:
            h = HomPoly.monomial(ring.field, rng.choice(monomial_basis(rng.randint(0, 3))))
            assert ideal_membership(gens, f * h)[0]


def test_zeroset_examples():
    x, y, z = (HomPoly.variable(QQ, v) for v in "xyz")
    assert projective_zeroset_empty([x, y, z])
    assert not projective_zeroset_empty([x * x, y * y])
    assert projective_zeroset_empty(parse_poly_list("x^2+y^2-z^2, x*y, z^3-x^2*z", QQ)) is False
    assert projective_zeroset_empty(parse_poly_list("x^2,y^2,z^2+x*y", QQ))


def test_zeroset_with_extra_line():
    # z, az, bz+cx+dy and x^d + a y^d + b z^d + c x z^(d-1) + d y z^(d-1):
    # a common zero exists exactly when (-d/c)^delta = -a
    delta, a, b, c, d = 3, 1, 2, 1, 1
    polys = parse_poly_list(f"z, {a}*z, {b}*z+{c}*x+{d}*y", QQ)
    F = parse_poly(f"x^3+{a}*y^3+{b}*z^3+{c}*x*z^2+{d}*y*z^2", QQ)
    assert (-d / c) ** delta == -a
    assert not projective_zeroset_empty(polys + [F])
    F2 = parse_poly("x^3+2*y^3+z^3+x*z^2+y*z^2", QQ)
    assert projective_zeroset_empty(polys + [F2])


def test_zeroset_invariant_under_coordinate_change():
    rng = random.Random(6)
    field = GF(13)
    for _ in range(40):
        polys = [random_poly(field, rng.randint(1, 3), rng, density=0.4) for _ in range(3)]
        polys = [f if not f.is_zero() else HomPoly.variable(field, "x") for f in polys]
        while True:
            A = [[field.random(rng, 12) for _ in range(3)] for _ in range(3)]
            if linalg.rank(A, field, 3) == 3:
                break
        moved = [f.substitute_linear(A) for f in polys]
        assert projective_zeroset_empty(polys) == projective_zeroset_empty(moved)


def test_zero_generator_rejected():
    ring = fermat(0, 3)
    with pytest.raises(ValueError):
        IdealGens(ring, [ring.F, HomPoly.variable(QQ, "x")])


def test_field_mismatch_rejected():
    ring = fermat(7, 3)
    with pytest.raises(ValueError):
        IdealGens(ring, [HomPoly.variable(QQ, "x")])


def test_parameter_pairs():
    ring = fermat(0, 3)
    x2, y2 = parse_poly_list("x^2,y^2", QQ)
    assert ring.is_parameter_pair(x2, y2)
    assert ring.is_parameter_pair(*parse_poly_list("x*y, x^2+y^2+z^2", QQ))
    assert not ring.is_parameter_pair(*parse_poly_list("x+y, x^2-y^2", QQ))


def test_primary_flag():
    ring, gens = make(0, "x^3+y^3+z^3", "x^2,y^2,z^2")
    assert gens.primary
    ring, gens = make(0, "x^3+y^3+z^3", "x^2,x*y")
    assert not gens.primary


def test_ring_describe():
    d = fermat(7, 4).describe()
    assert d["delta"] == 4 and d["genus"] == 3 and d["char"] == 7


def test_curve_ring_is_immutable_enough():
    ring = CurveRing(parse_poly("x^3+y^3+z^3", QQ))
    assert ring.lead == (3, 0, 0)
