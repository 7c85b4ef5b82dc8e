"""Annotation-versus-label checks and the arithmetic-only subset filter."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from ..corpus import ProblemRecord
from .answers import NON_NUMERIC, PAIR, RATIO, AnswerValue, extract_numbers, parse_answer
from .equations import (VALUE, ConsistencyError, EquationSystem, EvaluationError, ParseError,
                        UnsupportedError, linear_forms, parse_equation, solve)
from .formulas import ARITHMETIC_OPS, Constant, NumRef, StepRef, evaluate, parse_formula, scan_formula

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"
UNSUPPORTED = "unsupported"
NON_NUMERIC_ANSWER = "non-numeric-answer"
STATUSES = (CONSISTENT, INCONSISTENT, UNSUPPORTED, NON_NUMERIC_ANSWER)

TOLERANCE = Fraction(1, 10**6)


def format_value(v: Fraction) -> str:
    """Integer, terminating decimal, or ``p/q`` when the expansion repeats."""
    if v.denominator == 1:
        return str(v.numerator)
    d = v.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d != 1:
        return f"{v.numerator}/{v.denominator}"
    digits = 0
    while (v * 10**digits).denominator != 1:
        digits += 1
    scaled = abs(v.numerator * 10**digits // v.denominator)
    whole, frac = divmod(scaled, 10**digits)
    return f"{'-' if v < 0 else ''}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    computed: tuple[Fraction, ...]
    labeled: AnswerValue
    detail: str = ""

    def row(self) -> tuple[str, str, str, str]:
        computed = ";".join(format_value(v) for v in self.computed)
        if self.labeled.kind == RATIO:
            labeled = ":".join(format_value(v) for v in self.labeled.values)
        elif self.labeled.kind == NON_NUMERIC:
            labeled = self.labeled.raw
        else:
            labeled = ";".join(format_value(v) for v in self.labeled.values)
        return self.id, self.status, computed, labeled


def _close(computed: Fraction, labeled: Fraction) -> bool:
    return abs(computed - labeled) <= TOLERANCE * max(1, abs(labeled))


def matches(computed: tuple[Fraction, ...], labeled: AnswerValue) -> bool:
    """Compare computed values with a numeric labeled answer.

    A single label matches any computed value (a two-unknown problem may ask
    for one of them); pairs compare as sets; ratios by cross-multiplication.
    """
    if labeled.kind == RATIO:
        a, b = labeled.values
        if len(computed) == 1:
            return _close(b * computed[0], a)
        if len(computed) == 2:
            x, y = computed
            return _close(b * x, a * y)
        return False
    if labeled.kind == PAIR:
        if len(computed) != 2:
            return False
        (p, q), (r, s) = computed, labeled.values
        return (_close(p, r) and _close(q, s)) or (_close(p, s) and _close(q, r))
    return any(_close(c, labeled.values[0]) for c in computed)


def _equation_text(record: ProblemRecord) -> str:
    return ";".join(record.equations)


def compute(record: ProblemRecord) -> tuple[Fraction, ...]:
    """Value(s) implied by a record's annotation; raises ConsistencyError subclasses."""
    if record.equations:
        solution = solve(parse_equation(_equation_text(record)))
        if VALUE in solution:
            return (solution[VALUE],)
        return tuple(solution[k] for k in sorted(solution))
    if record.formula:
        program = parse_formula(record.formula)
        return (evaluate(program, extract_numbers(record.text)),)
    raise UnsupportedError("no annotation")


def check_record(record: ProblemRecord) -> CheckResult:
    labeled = parse_answer(record.answer)
    try:
        computed = compute(record)
    except (ParseError, UnsupportedError) as exc:
        return CheckResult(record.id, UNSUPPORTED, (), labeled, str(exc))
    except EvaluationError as exc:
        if exc.reason == "external constant":
            return CheckResult(record.id, UNSUPPORTED, (), labeled, str(exc))
        if not labeled.numeric:
            return CheckResult(record.id, NON_NUMERIC_ANSWER, (), labeled, str(exc))
        return CheckResult(record.id, INCONSISTENT, (), labeled, str(exc))
    if not labeled.numeric:
        return CheckResult(record.id, NON_NUMERIC_ANSWER, computed, labeled)
    status = CONSISTENT if matches(computed, labeled) else INCONSISTENT
    return CheckResult(record.id, status, computed, labeled)


def check(record: ProblemRecord) -> str:
    """Status of one record: consistent, inconsistent, unsupported or non-numeric-answer."""
    return check_record(record).status


@dataclass(frozen=True)
class ConsistencyReport:
    results: Mapping[str, CheckResult]

    def __len__(self) -> int:
        return len(self.results)

    def counts(self) -> dict[str, int]:
        out = dict.fromkeys(STATUSES, 0)
        for r in self.results.values():
            out[r.status] += 1
        return out

    def fractions(self) -> dict[str, float]:
        n = len(self.results)
        if not n:
            return dict.fromkeys(STATUSES, 0.0)
        return {k: v / n for k, v in self.counts().items()}

    def ids(self, status: str) -> list[str]:
        return [pid for pid, r in self.results.items() if r.status == status]

    def summary(self) -> dict:
        counts = self.counts()
        n = len(self.results)
        return {
            "problems": n,
            "counts": counts,
            "fractions": self.fractions(),
            # labels that disagree with their annotation, numeric or not
            "mismatch_fraction": (counts[INCONSISTENT] + counts[NON_NUMERIC_ANSWER]) / n if n else 0.0,
        }

    def rows(self):
        for pid in self.results:
            yield self.results[pid].row()


def check_corpus(records: Iterable[ProblemRecord]) -> ConsistencyReport:
    """Check every record; the report is ordered by id."""
    results = {r.id: check_record(r) for r in records}
    return ConsistencyReport(dict(sorted(results.items())))


# exclusion reasons
NO_ANNOTATION = "no annotation"
SYNTAX_ERROR = "syntax error"
UNSUPPORTED_OPERATION = "unsupported operation"
EXTERNAL_CONSTANT = "external constant"
REUSED_OPERAND = "reused operand"
NONLINEAR = "nonlinear"
MULTIPLE_UNKNOWNS = "multiple unknowns"
UNSUPPORTED_VARIABLE = "unsupported variable"
UNSUPPORTED_SYSTEM = "unsupported system"


def exclusion_reasons(record: ProblemRecord) -> tuple[str, ...]:
    """Why a record falls outside the arithmetic subset; empty when eligible."""
    if record.equations:
        try:
            system = parse_equation(_equation_text(record))
        except ParseError:
            return (SYNTAX_ERROR,)
        except UnsupportedError as exc:
            msg = str(exc)
            if msg.startswith("unsupported variable"):
                return (UNSUPPORTED_VARIABLE,)
            if "two unknowns" in msg:
                return (MULTIPLE_UNKNOWNS,)
            return (UNSUPPORTED_SYSTEM,)
        if len(system.variables) > 1:
            return (MULTIPLE_UNKNOWNS,)
        try:
            linear_forms(system)
        except UnsupportedError:
            return (NONLINEAR,)
        except EvaluationError:
            pass  # surfaces as inconsistent when checked
        return ()
    if not record.formula:
        return (NO_ANNOTATION,)
    try:
        program = scan_formula(record.formula)
    except ParseError:
        return (SYNTAX_ERROR,)
    reasons = []
    if any(s.op not in ARITHMETIC_OPS for s in program.steps):
        reasons.append(UNSUPPORTED_OPERATION)
    elif any(len(s.args) != 2 for s in program.steps):
        reasons.append(SYNTAX_ERROR)
    if any(isinstance(a, Constant) for a in program.operands()):
        reasons.append(EXTERNAL_CONSTANT)
    refs = [a for a in program.operands() if isinstance(a, (NumRef, StepRef))]
    if len(refs) != len(set(refs)):
        reasons.append(REUSED_OPERAND)
    return tuple(reasons)


@dataclass(frozen=True)
class SubsetResult:
    eligible: tuple[str, ...]
    excluded: Mapping[str, tuple[str, ...]]


def arithmetic_subset_filter(records: Iterable[ProblemRecord]) -> SubsetResult:
    """Split records into the arithmetic-only subset and the rest, with reasons."""
    eligible, excluded = [], {}
    for r in sorted(records, key=lambda r: r.id):
        reasons = exclusion_reasons(r)
        if reasons:
            excluded[r.id] = reasons
        else:
            eligible.append(r.id)
    return SubsetResult(tuple(eligible), excluded)


__all__ = [
    "CONSISTENT", "INCONSISTENT", "UNSUPPORTED", "NON_NUMERIC_ANSWER", "STATUSES",
    "CheckResult", "ConsistencyReport", "SubsetResult", "check", "check_record", "check_corpus",
    "compute", "matches", "format_value", "exclusion_reasons", "arithmetic_subset_filter",
    "ConsistencyError", "EquationSystem",
]
