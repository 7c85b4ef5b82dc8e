"""Number extraction from problem text and labeled-answer parsing."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..normalization.tokenizer import NUMERIC_TOKEN_RE, tokenize

SINGLE, PAIR, RATIO, NON_NUMERIC = "single", "pair", "ratio", "non-numeric"

_NUM = r"(?:\d{1,3}(?:,\d{3})+|\d+)(?:\.\d+)?|\.\d+"
_VALUE_RE = re.compile(
    rf"(?<![\w.])(?P<sign>-)?\s?(?:"
    rf"(?P<whole>\d+)\s+(?P<mn>\d+)\s*/\s*(?P<md>\d+)(?![\d.])"
    rf"|(?P<fn>{_NUM})\s*/\s*(?P<fd>{_NUM})"
    rf"|(?P<num>{_NUM}))"
)
_RATIO_RE = re.compile(rf"^\s*(?P<a>{_NUM})\s*:\s*(?P<b>{_NUM})\s*$")
_PAREN_RE = re.compile(r"\([^()]*\)")
_NAMED_RE = re.compile(rf"\b[xy]\s*=\s*(-?\s?(?:{_NUM}))")


def _frac(text: str) -> Fraction:
    return Fraction(text.replace(",", "").replace(" ", ""))


def to_fraction(token: str) -> Fraction:
    """Value of a numeric token (digit groups, decimals, ``a/b`` fractions)."""
    token = token.replace(",", "")
    if "/" in token:
        num, den = token.split("/", 1)
        den_v = Fraction(den)
        return Fraction(num) / den_v if den_v else Fraction(num)
    return Fraction(token)


def extract_numbers(text: str) -> list[Fraction]:
    """Quantities in order of appearance, using the normalization quantity pattern."""
    return [to_fraction(t) for t in tokenize(text) if NUMERIC_TOKEN_RE.fullmatch(t)]


def _values(text: str) -> list[Fraction]:
    out = []
    for m in _VALUE_RE.finditer(text):
        sign = -1 if m.group("sign") else 1
        if m.group("whole"):
            den = int(m.group("md"))
            if den == 0:
                continue
            v = int(m.group("whole")) + Fraction(int(m.group("mn")), den)
        elif m.group("fn"):
            den = _frac(m.group("fd"))
            v = _frac(m.group("fn")) / den if den else _frac(m.group("fn"))
        else:
            v = _frac(m.group("num"))
        out.append(sign * v)
    return out


@dataclass(frozen=True)
class AnswerValue:
    kind: str
    values: tuple[Fraction, ...]
    raw: str = ""

    def __post_init__(self):
        if self.kind == RATIO and (len(self.values) != 2 or min(self.values) <= 0):
            raise ValueError("a ratio needs two positive components")

    @property
    def numeric(self) -> bool:
        return self.kind != NON_NUMERIC


def parse_answer(raw: str) -> AnswerValue:
    """Classify a labeled answer as single, pair, ratio or non-numeric.

    Units and parentheticals are ignored; the first numeric value wins.
    """
    raw = raw or ""
    text = raw.replace("−", "-").replace("$", " ").replace("%", " ")
    stripped = _PAREN_RE.sub(" ", text).strip()
    m = _RATIO_RE.match(stripped)
    if m:
        a, b = _frac(m.group("a")), _frac(m.group("b"))
        if a > 0 and b > 0:
            return AnswerValue(RATIO, (a, b), raw)
    named = _NAMED_RE.findall(stripped)
    if len(named) == 2:
        return AnswerValue(PAIR, tuple(_frac(v) for v in named), raw)
    parts = [p for p in stripped.split(";") if p.strip()]
    if len(parts) == 2:
        pair = [_values(p) for p in parts]
        if all(pair):
            return AnswerValue(PAIR, (pair[0][0], pair[1][0]), raw)
    values = _values(stripped) or _values(text)
    if values:
        return AnswerValue(SINGLE, (values[0],), raw)
    return AnswerValue(NON_NUMERIC, (), raw)
