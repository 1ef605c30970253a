"""Verdict, caveat and certificate types shared by the rule engine."""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction


class Caveat(str, Enum):
    DEFINITE = "DefiniteForGivenP"
    CHAR0_OR_LARGE_P = "Char0OrLargeP"
    CHAR0_ONLY = "Char0Only"
    ALSO_PLUS = "AlsoPlusClosure"
    FROBENIUS = "FrobeniusClosure"

    @property
    def text(self) -> str:
        return _CAVEAT_TEXT[self]

    def valid_at(self, p: int) -> bool:
        """Whether a verdict carrying this caveat is proven at characteristic p."""
        if self in (Caveat.DEFINITE, Caveat.ALSO_PLUS, Caveat.FROBENIUS):
            return True
        return p == 0


_CAVEAT_TEXT = {
    Caveat.DEFINITE: "valid at this p",
    Caveat.CHAR0_OR_LARGE_P: "char 0 or p >> 0",
    Caveat.CHAR0_ONLY: "char 0 only",
    Caveat.ALSO_PLUS: "valid at this p; also plus closure",
    Caveat.FROBENIUS: "Frobenius closure",
}


class Status(str, Enum):
    IN_IDEAL = "InIdeal"
    IN_CLOSURE = "InClosure"
    NOT_IN_CLOSURE = "NotInClosure"
    UNKNOWN = "Unknown"


class DegreeStatus(str, Enum):
    ALL_IN = "AllIn"
    IFF_IDEAL = "IffIdeal"
    ELEMENT_WISE = "ElementWise"
    UNKNOWN = "Unknown"


class RuleConflictError(RuntimeError):
    """Two rules that are both valid at this characteristic disagree."""


@dataclass(frozen=True)
class Certificate:
    rule: str
    statement: str
    checks: tuple = ()

    def extended(self, *checks) -> "Certificate":
        return Certificate(self.rule, self.statement, self.checks + tuple(checks))

    def to_json(self) -> dict:
        return {"rule": self.rule, "statement": self.statement, "checks": list(self.checks)}


@dataclass(frozen=True)
class Verdict:
    status: Status
    caveat: Caveat | None = None
    certificate: Certificate | None = None
    diagnostic: str = ""

    def valid_at(self, p: int) -> bool:
        if self.status == Status.UNKNOWN:
            return False
        if self.status == Status.IN_IDEAL:
            return True
        return self.caveat is not None and self.caveat.valid_at(p)

    def to_json(self, p: int | None = None) -> dict:
        out = {
            "status": self.status.value,
            "caveat": self.caveat.value if self.caveat else None,
            "caveat_text": self.caveat.text if self.caveat else None,
            "rule": self.certificate.rule if self.certificate else None,
        }
        if p is not None:
            out["valid"] = self.valid_at(p)
        if self.diagnostic:
            out["diagnostic"] = self.diagnostic
        return out


def contradicts(a: Verdict, b: Verdict, p: int) -> bool:
    """Both verdicts proven at p, one says in the closure and the other says not."""
    if not (a.valid_at(p) and b.valid_at(p)):
        return False
    inside = {Status.IN_IDEAL, Status.IN_CLOSURE}
    return (a.status in inside and b.status == Status.NOT_IN_CLOSURE) or (
        b.status in inside and a.status == Status.NOT_IN_CLOSURE
    )


@dataclass(frozen=True)
class SlopeBounds:
    """Bounds for the maximal and minimal slope attached to the generators.

    ``mu`` is the slope of the dual of Syz(0), i.e. delta * D / (n - 1).
    """

    mu: Fraction
    mu_max_upper: Fraction | None
    mu_min_lower: Fraction | None
    source: str
    source_degree: int | None = None
    exact: bool = False

    def to_json(self) -> dict:
        f = lambda v: None if v is None else str(v)  # noqa: E731
        return {
            "mu": f(self.mu),
            "mu_max_upper": f(self.mu_max_upper),
            "mu_min_lower": f(self.mu_min_lower),
            "source": self.source,
            "source_degree": self.source_degree,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class ClassTest:
    """Data for testing [f^q * g / (u v)] = 0 in a window where that decides membership."""

    pair: tuple
    pair_gens: object
    multiplier: object
    q: int
    inclusion_caveat: Caveat
    exclusion_caveat: Caveat
    hm_check: dict | None = None


@dataclass(frozen=True)
class DegreeRule:
    """What one rule says about a whole degree m.

    kind "AllIn": every element of R_m is in the closure.
    kind "IffIdeal": an element of R_m is in the closure only if it is in the ideal.
    kind "ClassTest": membership is decided by a class image, see ClassTest.
    kind "FrobeniusPower": f is in the closure iff f^q is in the ideal's q-th bracket power.
    """

    kind: str
    caveat: Caveat
    certificate: Certificate
    test: ClassTest | None = None
    q: int = 1

    def to_json(self) -> dict:
        return {"kind": self.kind, "caveat": self.caveat.value, "certificate": self.certificate.to_json()}


@dataclass
class ElementReport:
    element: str
    verdict: Verdict
    fired: list = field(default_factory=list)


# arithmetic of the inequality checks

_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_CMP = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
}


def evaluate(expr: str, variables: dict) -> Fraction:
    """Evaluate an arithmetic expression over Fractions: numbers, names, + - * / ^ and parentheses."""

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return Fraction(variables[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -walk(node.operand)
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            right = walk(node.right)
            if isinstance(node.op, ast.Pow):
                return _OPS[ast.Pow](walk(node.left), int(right))
            return _OPS[type(node.op)](walk(node.left), right)
        raise ValueError(f"unsupported expression {expr!r}")

    return walk(ast.parse(expr.replace("^", "**"), mode="eval"))


def inequality(lhs: str, op: str, rhs: str, **variables):
    """Evaluate lhs op rhs; returns (holds, JSON check record)."""
    vals = {k: Fraction(v) for k, v in variables.items()}
    holds = _CMP[op](evaluate(lhs, vals), evaluate(rhs, vals))
    record = {
        "check": "inequality",
        "lhs": lhs,
        "op": op,
        "rhs": rhs,
        "vars": {k: str(v) for k, v in sorted(vals.items())},
    }
    return holds, record


def check_inequality(record: dict) -> bool:
    vals = {k: Fraction(v) for k, v in record["vars"].items()}
    return _CMP[record["op"]](evaluate(record["lhs"], vals), evaluate(record["rhs"], vals))
