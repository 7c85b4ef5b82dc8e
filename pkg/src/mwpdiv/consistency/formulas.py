"""Operation-program formulas such as ``multiply(n0,n1)|divide(#0,n2)``."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .equations import EvaluationError, ParseError, UnsupportedError

ARITHMETIC_OPS = ("add", "subtract", "multiply", "divide")

_TOKEN_RE = re.compile(r"\s*(?:(?P<word>[A-Za-z_#][\w.]*|\d+(?:\.\d+)?)|(?P<punct>[(),|]))")


@dataclass(frozen=True)
class NumRef:
    index: int

    def __str__(self) -> str:
        return f"n{self.index}"


@dataclass(frozen=True)
class StepRef:
    index: int

    def __str__(self) -> str:
        return f"#{self.index}"


@dataclass(frozen=True)
class Constant:
    name: str

    def __str__(self) -> str:
        return self.name


Operand = NumRef | StepRef | Constant


@dataclass(frozen=True)
class Step:
    op: str
    args: tuple[Operand, ...]

    def __str__(self) -> str:
        return f"{self.op}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class FormulaProgram:
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return "|".join(map(str, self.steps))

    def operands(self):
        for step in self.steps:
            yield from step.args

    @property
    def ops(self) -> tuple[str, ...]:
        return tuple(s.op for s in self.steps)


def _operand(word: str, pos: int) -> Operand:
    m = re.fullmatch(r"n(\d+)", word)
    if m:
        return NumRef(int(m.group(1)))
    m = re.fullmatch(r"#(\d+)", word)
    if m:
        return StepRef(int(m.group(1)))
    if word.startswith("const_") or re.fullmatch(r"\d+(?:\.\d+)?", word):
        return Constant(word)
    raise ParseError(f"unknown operand {word!r}", pos)


class _Scanner:
    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        while pos < len(text):
            if not text[pos:].strip():
                break
            m = _TOKEN_RE.match(text, pos)
            if not m:
                at = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[at]!r}", at)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0
        self.end = len(text)
        self.steps: list[Step] = []

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", self.end)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def call(self) -> StepRef:
        kind, name, pos = self.take()
        if kind != "word" or not re.fullmatch(r"[A-Za-z_]\w*", name):
            raise ParseError("expected an operation name", pos)
        kind, tok, pos = self.take()
        if tok != "(":
            raise ParseError("expected '('", pos)
        args = []
        if self.peek()[1] != ")":
            while True:
                args.append(self.arg())
                kind, tok, pos = self.take()
                if tok == ")":
                    break
                if tok != ",":
                    raise ParseError("expected ',' or ')'", pos)
        else:
            self.take()
        for a in args:
            if isinstance(a, StepRef) and a.index >= len(self.steps):
                raise ParseError(f"step reference #{a.index} does not point to an earlier step", pos)
        self.steps.append(Step(name.lower(), tuple(args)))
        return StepRef(len(self.steps) - 1)

    def arg(self) -> Operand:
        kind, word, pos = self.peek()
        if kind != "word":
            raise ParseError("expected an operand", pos)
        if self.i + 1 < len(self.tokens) and self.tokens[self.i + 1][1] == "(":
            # nested call: flattened into its own step
            return self.call()
        self.take()
        return _operand(word, pos)


def scan_formula(text: str) -> FormulaProgram:
    """Parse steps without restricting the operation set."""
    s = _Scanner(text)
    while True:
        while s.peek()[1] in ("|", ","):
            s.take()
        if s.peek()[0] == "eof":
            break
        s.call()
    if not s.steps:
        raise ParseError("empty formula", 0)
    return FormulaProgram(tuple(s.steps))


def parse_formula(text: str) -> FormulaProgram:
    """Parse a whitespace- or pipe-separated step list over the four arithmetic ops.

    Nested calls are flattened into earlier steps.
    """
    program = scan_formula(text)
    for step in program.steps:
        if step.op not in ARITHMETIC_OPS:
            raise UnsupportedError(f"unsupported operation {step.op!r}")
        if len(step.args) != 2:
            raise ParseError(f"{step.op} takes 2 operands, got {len(step.args)}")
    return program


def evaluate(program: FormulaProgram, numbers: Sequence) -> Fraction:
    """Exact value of the last step, with ``nK`` bound to ``numbers[K]``."""
    values: list[Fraction] = []
    for step in program.steps:
        if step.op not in ARITHMETIC_OPS:
            raise UnsupportedError(f"unsupported operation {step.op!r}")
        args = []
        for a in step.args:
            if isinstance(a, NumRef):
                if a.index >= len(numbers):
                    raise EvaluationError("missing operand", str(a))
                args.append(Fraction(numbers[a.index]))
            elif isinstance(a, StepRef):
                args.append(values[a.index])
            else:
                raise EvaluationError("external constant", a.name)
        x, y = args
        if step.op == "add":
            values.append(x + y)
        elif step.op == "subtract":
            values.append(x - y)
        elif step.op == "multiply":
            values.append(x * y)
        else:
            if y == 0:
                raise EvaluationError("division by zero")
            values.append(x / y)
    return values[-1]
