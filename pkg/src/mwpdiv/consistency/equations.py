"""Infix equation systems over x and y: parsing and exact linear solving."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

VARIABLES = ("x", "y")
VALUE = "value"  # solve() key for a variable-free system

# one-to-one character substitutions keep error positions valid
_TRANSLATE = str.maketrans({"−": "-", "–": "-", "×": "*", "·": "*", "÷": "/"})
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d{1,3}(?:,\d{3})+(?:\.\d+)?|\d+(?:\.\d+)?|\.\d+)"
    r"|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/()=]))"
)


class ConsistencyError(ValueError):
    """Base class for annotation problems."""


class ParseError(ConsistencyError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(f"{message} at position {position}" if position is not None else message)


class UnsupportedError(ConsistencyError):
    """Well-formed but outside the supported fragment."""


class EvaluationError(ConsistencyError):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


@dataclass(frozen=True)
class Num:
    value: Fraction

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Neg:
    operand: "Expression"

    def __str__(self) -> str:
        return f"-({self.operand})"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"

    def __str__(self) -> str:
        return f"({self.left} {self.op} {self.right})"


Expression = Num | Var | Neg | BinOp


def variables(expr) -> set[str]:
    if isinstance(expr, Var):
        return {expr.name}
    if isinstance(expr, Neg):
        return variables(expr.operand)
    if isinstance(expr, BinOp):
        return variables(expr.left) | variables(expr.right)
    return set()


@dataclass(frozen=True)
class EquationSystem:
    # right side is None for a bare expression
    equations: tuple[tuple[Expression, Expression | None], ...]

    @property
    def variables(self) -> tuple[str, ...]:
        names = set()
        for left, right in self.equations:
            names |= variables(left)
            if right is not None:
                names |= variables(right)
        return tuple(sorted(names))

    def __len__(self) -> int:
        return len(self.equations)


class _Parser:
    def __init__(self, text: str, offset: int):
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN_RE.match(text, pos)
            if not m:
                at = pos + len(text[pos:]) - len(text[pos:].lstrip())
                ch = text[at]
                if ch == "%":
                    raise ParseError("percent sign not supported", offset + at)
                raise ParseError(f"unexpected character {ch!r}", offset + at)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), offset + m.start(kind)))
            pos = m.end()
        self.i = 0
        self.end = offset + len(text)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", self.end)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value:
            raise ParseError(f"expected {value!r}", pos)

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            pos = self.peek()[2]
            right = self.unary()
            if op == "/" and isinstance(right, Num) and right.value == 0:
                raise ParseError("division by literal zero", pos)
            node = BinOp(op, node, right)
        return node

    def unary(self):
        kind, text, pos = self.peek()
        if kind == "op" and text in ("-", "+"):
            self.take()
            operand = self.unary()
            return Neg(operand) if text == "-" else operand
        return self.primary()

    def primary(self):
        kind, text, pos = self.take()
        if kind == "num":
            return Num(Fraction(text.replace(",", "")))
        if kind == "name":
            return Var(text.lower() if len(text) == 1 else text)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "eof":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {text!r}", pos)


def _parse_one(text: str, offset: int):
    p = _Parser(text, offset)
    if not p.tokens:
        raise ParseError("empty equation", offset)
    left = p.expr()
    right = None
    if p.peek()[1] == "=":
        p.take()
        right = p.expr()
    kind, tok, pos = p.peek()
    if kind != "eof":
        raise ParseError(f"unexpected {tok!r}", pos)
    return left, right


def parse_equation(text: str) -> EquationSystem:
    """Parse ``;``-separated equations into a system over at most x and y."""
    text = text.translate(_TRANSLATE)
    equations = []
    offset = 0
    for part in text.split(";"):
        if part.strip():
            equations.append(_parse_one(part, offset))
        offset += len(part) + 1
    if not equations:
        raise ParseError("empty equation", 0)
    system = EquationSystem(tuple(equations))
    names = system.variables
    if len(names) > 2:
        raise UnsupportedError(f"more than two unknowns: {', '.join(names)}")
    if not set(names) <= set(VARIABLES):
        raise UnsupportedError(f"unsupported variable(s): {', '.join(n for n in names if n not in VARIABLES)}")
    for left, right in equations:
        if right is None and (variables(left) or len(equations) > 1):
            raise ParseError("missing '='")
    if len(equations) == 1 and len(names) == 2:
        raise UnsupportedError("one equation in two unknowns")
    if len(equations) == 2 and len(names) != 2:
        raise UnsupportedError("two equations need exactly the unknowns x and y")
    if len(equations) > 2:
        raise UnsupportedError("more than two equations")
    return system


def evaluate_expression(expr, env: dict[str, Fraction] | None = None) -> Fraction:
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Var):
        if env is None or expr.name not in env:
            raise EvaluationError("unbound variable", expr.name)
        return env[expr.name]
    if isinstance(expr, Neg):
        return -evaluate_expression(expr.operand, env)
    a = evaluate_expression(expr.left, env)
    b = evaluate_expression(expr.right, env)
    if expr.op == "+":
        return a + b
    if expr.op == "-":
        return a - b
    if expr.op == "*":
        return a * b
    if b == 0:
        raise EvaluationError("division by zero")
    return a / b


# affine form: {"": constant, "x": coefficient, ...}
def _affine(expr) -> dict[str, Fraction]:
    if isinstance(expr, Num):
        return {"": expr.value}
    if isinstance(expr, Var):
        return {"": Fraction(0), expr.name: Fraction(1)}
    if isinstance(expr, Neg):
        return {k: -v for k, v in _affine(expr.operand).items()}
    a, b = _affine(expr.left), _affine(expr.right)
    if expr.op in "+-":
        sign = 1 if expr.op == "+" else -1
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, Fraction(0)) + sign * v
        return out
    a_lin = any(v for k, v in a.items() if k)
    b_lin = any(v for k, v in b.items() if k)
    if expr.op == "*":
        if a_lin and b_lin:
            raise UnsupportedError("nonlinear: product of unknowns")
        scale, form = (a[""], b) if not a_lin else (b[""], a)
        return {k: v * scale for k, v in form.items()}
    if b_lin:
        raise UnsupportedError("nonlinear: unknown in a divisor")
    if b[""] == 0:
        raise EvaluationError("division by zero")
    return {k: v / b[""] for k, v in a.items()}


def linear_forms(system: EquationSystem) -> list[dict[str, Fraction]]:
    """Each equation as ``lhs - rhs`` in affine form; raises on nonlinearity."""
    forms = []
    for left, right in system.equations:
        form = _affine(left)
        if right is not None:
            for k, v in _affine(right).items():
                form[k] = form.get(k, Fraction(0)) - v
        forms.append(form)
    return forms


def _is_literal(expr) -> bool:
    return isinstance(expr, Num) or isinstance(expr, Neg) and isinstance(expr.operand, Num)


def solve(system: EquationSystem) -> dict[str, Fraction]:
    """Exact solution; a variable-free system yields ``{"value": v}``.

    For a variable-free equation with a lone number on one side, the value is
    the other side; with computations on both sides they must agree.
    """
    names = system.variables
    if not names:
        left, right = system.equations[0]
        lv = evaluate_expression(left)
        if right is None:
            return {VALUE: lv}
        rv = evaluate_expression(right)
        if _is_literal(right):
            return {VALUE: lv}
        if _is_literal(left):
            return {VALUE: rv}
        if lv != rv:
            raise EvaluationError("sides disagree", f"{lv} != {rv}")
        return {VALUE: lv}
    forms = linear_forms(system)
    zero = Fraction(0)
    if len(names) == 1:
        (v,) = names
        a, c = forms[0].get(v, zero), forms[0].get("", zero)
        if a == 0:
            raise EvaluationError("no unique solution")
        return {v: -c / a}
    x, y = names
    (a1, b1, c1), (a2, b2, c2) = ((f.get(x, zero), f.get(y, zero), -f.get("", zero)) for f in forms)
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise EvaluationError("no unique solution")
    return {x: (c1 * b2 - c2 * b1) / det, y: (a1 * c2 - a2 * c1) / det}
