import random

import pytest

from tightclosure.curvering import CurveRing, IdealGens
from tightclosure.exactfield import GF, QQ
from tightclosure.polyspace import HomPoly, parse_poly, parse_poly_list


def field_of(p):
    return GF(p) if p else QQ


def make(p, curve, ideal=None):
    fld = field_of(p)
    ring = CurveRing(parse_poly(curve, fld))
    if ideal is None:
        return ring
    return ring, IdealGens(ring, parse_poly_list(ideal, fld))


def fermat(p, delta):
    return make(p, f"x^{delta}+y^{delta}+z^{delta}")


def random_poly(field, degree, rng, bound=5, density=1.0):
    from tightclosure.polyspace import monomial_basis

    terms = {}
    for m in monomial_basis(degree):
        if rng.random() <= density:
            terms[m] = field.random(rng, bound)
    return HomPoly(field, degree, terms)


def random_smooth_curve(field, delta, rng, extra=3):
    """Fermat-type form plus a few random terms, retried until smooth."""
    from tightclosure.curvering import SingularCurveError
    from tightclosure.polyspace import monomial_basis

    basis = monomial_basis(delta)
    while True:
        terms = {(delta, 0, 0): 1, (0, delta, 0): 1, (0, 0, delta): 1}
        for _ in range(extra):
            m = rng.choice(basis)
            terms[m] = field.add(terms.get(m, field.zero), field.random(rng, 4))
        F = HomPoly(field, delta, terms)
        try:
            return CurveRing(F)
        except SingularCurveError:
            continue


@pytest.fixture
def rng():
    return random.Random(20240611)


# one PASS/FAIL line per acceptance criterion

_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    if report.when == "call" or report.outcome == "failed":
        ok = report.outcome == "passed"
        _CRITERIA.setdefault(crit, []).append((report.nodeid.split("::")[-1], ok))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion = marker.args[0]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_CRITERIA):
        results = _CRITERIA[crit]
        ok = all(r for _, r in results)
        failed = [name for name, r in results if not r]
        line = f"{'PASS' if ok else 'FAIL'} criterion {crit}"
        if failed:
            line += " (failed: " + ", ".join(failed) + ")"
        terminalreporter.write_line(line)
