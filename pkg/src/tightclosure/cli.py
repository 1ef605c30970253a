"""Command line interface: ``tightclosure <command> [options]``.

Exit codes: 0 on success, 2 when the input is rejected, 3 when ``--strict``
is given and the outcome is mostly Unknown.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .curvering import CurveRing, IdealGens
from .exactfield import GF, QQ, is_prime
from .frobenius import DEFAULT_BUDGET, BudgetExceeded, frobenius_closure_lower_bound, frobenius_power_membership, scan
from .polyspace import PolyParseError, parse_poly, parse_poly_list
from .syzygy import find_primary_syzygy, syzygy_space

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNKNOWN = 3


class ValidationError(ValueError):
    pass


def parse_range(text: str):
    """``a..b`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ValidationError(f"bad degree range {text!r}; expected a..b") from None
    if lo < 0 or hi < lo:
        raise ValidationError(f"bad degree range {text!r}")
    return lo, hi


def parse_int_list(text: str):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValidationError(f"bad integer list {text!r}") from None


def field_for(char: int):
    if char == 0:
        return QQ
    if char < 2 or not is_prime(char):
        raise ValidationError(f"characteristic must be 0 or a prime, got {char}")
    return GF(char)


class RunConfig:
    def __init__(self, args):
        self.args = args
        self.char = args.char
        self.field = field_for(args.char)
        self.ring = None
        self.gens = None
        self.element = None
        if getattr(args, "curve", None):
            self.ring = CurveRing(self._parse("--curve", args.curve))
        if getattr(args, "ideal", None):
            if self.ring is None:
                raise ValidationError("--ideal needs --curve")
            try:
                polys = parse_poly_list(args.ideal, self.field)
            except PolyParseError as exc:
                raise ValidationError(f"--ideal: {exc}") from None
            self.gens = IdealGens(self.ring, polys)
        if getattr(args, "element", None):
            self.element = self._parse("--element", args.element)

    def _parse(self, flag, text):
        try:
            return parse_poly(text, self.field)
        except PolyParseError as exc:
            raise ValidationError(f"{flag}: {exc}") from None

    def require(self, *names):
        for name in names:
            if getattr(self, name) is None:
                raise ValidationError(f"this command needs --{name.replace('gens', 'ideal')}")

    def degree_range(self):
        if self.args.degrees:
            lo, hi = parse_range(self.args.degrees)
        else:
            lo, hi = 0, self.gens.degree_sum
        return range(lo, hi + 1)


def _engine(cfg):
    from .criteria.engine import Engine

    return Engine(cfg.gens, seed=cfg.args.seed, e_max=cfg.args.emax, budget=cfg.args.budget)


def base_report(cfg) -> dict:
    ring = cfg.ring
    return {
        "curve": str(ring.F),
        "char": cfg.char,
        "delta": ring.delta,
        "genus": ring.genus,
        "ideal": cfg.gens.strings() if cfg.gens else [],
        "syzygy_table": [],
        "certificates": [],
        "degree_table": [],
        "oracle": [],
        "seed": cfg.args.seed,
        "version": __version__,
    }


def _oracle_hits(rows):
    out = []
    for row in rows:
        for el in row.elements:
            cert = el.verdict.certificate
            if cert is not None and cert.rule == "frobenius-oracle":
                (check,) = cert.checks
                out.append({"m": row.m, "element": el.element, "status": "InFrobeniusClosure", "q": check["q"]})
    return out


def cmd_analyze(cfg):
    cfg.require("ring", "gens")
    engine = _engine(cfg)
    degrees = cfg.degree_range()
    profile = engine.profile(degrees)
    report = base_report(cfg)
    report["syzygy_table"] = engine.syzygy_table(range(0, cfg.gens.degree_sum + 1))
    report["certificates"] = [c.to_json() for c in profile.structure_certificates]
    report["degree_table"] = [r.to_json() for r in profile.rows]
    report["oracle"] = _oracle_hits(profile.rows)
    report["notes"] = profile.notes
    unknown = sum(1 for r in profile.rows if not r.valid)
    return report, unknown * 2 > len(profile.rows)


def cmd_decide(cfg):
    cfg.require("ring", "gens", "element")
    engine = _engine(cfg)
    rep = engine.decide(cfg.element)
    report = base_report(cfg)
    k0 = None if rep.verdict.status.value == "InIdeal" else engine.analysis.k0
    if k0 is not None:
        report["syzygy_table"] = engine.syzygy_table(range(max(k0 - 1, 0), k0 + 1))
    report["certificates"] = [rep.verdict.certificate.to_json()] if rep.verdict.certificate else []
    report["decision"] = rep.to_json(cfg.char)
    if rep.oracle is not None:
        report["oracle"] = [dict(rep.oracle, element=rep.element)]
    return report, not rep.verdict.valid_at(cfg.char)


def cmd_syzygies(cfg):
    cfg.require("ring", "gens")
    engine = _engine(cfg)
    degrees = cfg.degree_range()
    report = base_report(cfg)
    table = engine.syzygy_table(degrees)
    for row in table:
        if row["dim"] and row["k"] == engine.analysis.k0:
            space = syzygy_space(cfg.gens, row["k"])
            row["basis"] = [s.strings() for s in space.basis]
            if cfg.gens.n == 3:
                s = find_primary_syzygy(cfg.gens, row["k"], seed=cfg.args.seed, space=space)
                row["primary"] = s.strings() if s is not None else None
    report["syzygy_table"] = table
    report["certificates"] = [c.to_json() for c in engine.structure_certificates()]
    return report, False


def cmd_frobtest(cfg):
    cfg.require("ring", "gens", "element")
    if cfg.char == 0:
        raise ValidationError("frobtest needs a positive characteristic")
    report = base_report(cfg)
    table = []
    for e in range(0, cfg.args.emax + 1):
        try:
            hit = frobenius_power_membership(cfg.gens, cfg.element, e, cfg.args.budget)
        except BudgetExceeded as exc:
            table.append({"e": e, "q": cfg.char**e, "member": None, "note": str(exc)})
            break
        table.append({"e": e, "q": cfg.char**e, "member": hit})
    res = frobenius_closure_lower_bound(cfg.gens, cfg.element, cfg.args.emax, cfg.args.budget)
    report["oracle"] = [dict(res.to_json(), element=str(cfg.element), powers=table)]
    return report, res.status != "InFrobeniusClosure"


def cmd_scan(args):
    ps = parse_int_list(args.primes)
    for p in ps:
        if p != 0 and not is_prime(p):
            raise ValidationError(f"{p} is not a prime")
    m_range = parse_range(args.degrees) if args.degrees else None
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        cells = scan(ps, parse_int_list(args.deltas), parse_int_list(args.exponents), m_range=m_range,
                     budget=args.budget, seed=args.seed, e_max=args.emax, out=out)
    finally:
        if args.out:
            out.close()
    bad = [c for c in cells if c.contradictions]
    return bool(bad)


# text rendering
def _caveat(obj):
    return f" [{obj['caveat_text']}]" if obj.get("caveat_text") else ""


def render_text(command, report) -> str:
    lines = [
        f"curve {report['curve']} over {'Q' if report['char'] == 0 else 'F_' + str(report['char'])}: "
        f"degree {report['delta']}, genus {report['genus']}",
    ]
    if report["ideal"]:
        lines.append("ideal (" + ", ".join(report["ideal"]) + ")")
    if report["syzygy_table"]:
        lines.append("syzygies:  k  dim  koszul")
        for row in report["syzygy_table"]:
            lines.append(f"          {row['k']:>3} {row['dim']:>4} {row['koszul_dim']:>6}")
            if row.get("basis"):
                for b in row["basis"]:
                    lines.append("              (" + ", ".join(b) + ")")
            if "primary" in row:
                lines.append("              primary: " + ("(" + ", ".join(row["primary"]) + ")" if row["primary"] else "none found"))
    for c in report["certificates"]:
        lines.append(f"certificate {c['rule']}: {c['statement']}")
    if report["degree_table"]:
        lines.append("degree  dim R_m  dim I_m  closure  status        rule")
        for r in report["degree_table"]:
            closure = "?" if r["closure_dim"] is None else str(r["closure_dim"])
            lines.append(
                f"{r['m']:>6} {r['dim_R']:>8} {r['dim_ideal']:>8} {closure:>8}  {r['status']:<12}  "
                f"{r['rule'] or '-'}{_caveat(r)}"
            )
    if "decision" in report:
        d = report["decision"]
        v = d["verdict"]
        lines.append(f"{d['element']}: {v['status']}{_caveat(v)}")
        if v.get("rule"):
            lines.append(f"  rule {v['rule']}: {d['certificate']['statement']}")
        for msg in d["diagnostics"]:
            lines.append("  note: " + msg)
    for o in report["oracle"]:
        if "powers" in o:
            for row in o["powers"]:
                state = {True: "yes", False: "no", None: "budget exceeded"}[row["member"]]
                lines.append(f"e={row['e']} q={row['q']}: f^q in I^[q]? {state}")
        if "exponent" in o:
            lines.append(f"oracle {o['element']}: {o['status']}" + (f" at e={o['exponent']}" if o["exponent"] is not None else ""))
        else:
            lines.append(f"oracle m={o['m']} {o['element']}: {o['status']} (q={o['q']})")
    for n in report.get("notes", []):
        lines.append("note: " + n)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tightclosure",
                                     description="Tight and solid closure of primary ideals on smooth plane curves.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, curve=True):
        if curve:
            p.add_argument("--char", type=int, default=0, help="0 for the rationals, or a prime")
            p.add_argument("--curve", required=True, help="equation F of the curve, e.g. x^3+y^3+z^3")
            p.add_argument("--ideal", help="comma separated generators")
            p.add_argument("--element", help="element f0 to test")
        p.add_argument("--degrees", help="degree range a..b")
        p.add_argument("--emax", type=int, default=3, help="largest Frobenius exponent e tried")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="largest number of monomials in one graded piece for Frobenius computations")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--strict", action="store_true", help="exit with code 3 when the outcome is mostly Unknown")

    for name, helptext in (
        ("analyze", "closure status degree by degree"),
        ("decide", "decide whether one element lies in the closure"),
        ("syzygies", "dimensions of syzygy spaces"),
        ("frobtest", "Frobenius power membership of one element"),
    ):
        common(sub.add_parser(name, help=helptext))
    sp = sub.add_parser("scan", help="degree profiles of x^a, y^a, z^a on Fermat curves, as JSON lines")
    sp.add_argument("--primes", default="5,7,11")
    sp.add_argument("--deltas", default="3,4,5")
    sp.add_argument("--exponents", default="2,3")
    sp.add_argument("--out", help="write JSON lines to this file instead of stdout")
    common(sp, curve=False)
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "decide": cmd_decide,
    "syzygies": cmd_syzygies,
    "frobtest": cmd_frobtest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "scan":
            contradicted = cmd_scan(args)
            return EXIT_UNKNOWN if (contradicted and args.strict) else EXIT_OK
        cfg = RunConfig(args)
        report, unknown = COMMANDS[args.command](cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(render_text(args.command, report))
    if args.strict and unknown:
        return EXIT_UNKNOWN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
