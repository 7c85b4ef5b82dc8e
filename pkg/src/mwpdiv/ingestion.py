"""Corpus loaders: canonical JSON lines plus ASDiv (XML) and MathQA (JSON) adapters."""

from __future__ import annotations

import json
import logging
import re
import xml.etree.ElementTree as ET
from pathlib import Path

from .corpus import Corpus, CorpusError, ProblemRecord, ProblemType
from .textio import atomic_write

log = logging.getLogger(__name__)

CANONICAL_KEYS = (
    "id", "body", "question", "equations", "formula", "answer",
    "problem_type", "grade", "source",
)
_REQUIRED = ("id", "body")


class InputError(CorpusError):
    """A malformed input file; the message names the file and location."""


def _warn(warnings: list[str] | None, message: str) -> None:
    log.warning(message)
    if warnings is not None:
        warnings.append(message)


def record_from_dict(obj: dict, where: str = "", warnings: list[str] | None = None) -> ProblemRecord:
    prefix = f"{where}: " if where else ""
    if not isinstance(obj, dict):
        raise InputError(f"{prefix}expected an object")
    for key in _REQUIRED:
        if key not in obj:
            raise InputError(f"{prefix}missing field {key}")
    unknown = sorted(set(obj) - set(CANONICAL_KEYS))
    if unknown:
        _warn(warnings, f"{prefix}ignoring unknown keys {', '.join(unknown)}")

    def text_field(key, default=""):
        value = obj.get(key, default)
        if value is None:
            return default
        if not isinstance(value, str):
            raise InputError(f"{prefix}field {key} must be a string")
        return value

    equations = obj.get("equations") or []
    if isinstance(equations, str):
        equations = [equations]
    if not isinstance(equations, list) or not all(isinstance(e, str) for e in equations):
        raise InputError(f"{prefix}field equations must be an array of strings")
    grade = obj.get("grade")
    if grade is not None and (isinstance(grade, bool) or not isinstance(grade, int)):
        raise InputError(f"{prefix}field grade must be an integer")
    answer = obj.get("answer", "")
    if isinstance(answer, (int, float)) and not isinstance(answer, bool):
        answer = str(answer)
    ptype = obj.get("problem_type")
    try:
        return ProblemRecord(
            id=text_field("id"),
            body=text_field("body"),
            question=text_field("question"),
            equations=tuple(equations),
            formula=obj.get("formula") or None,
            answer=answer if isinstance(answer, str) else "",
            problem_type=ProblemType.from_name(ptype) if ptype else None,
            grade=grade,
            source=obj.get("source") or None,
        )
    except InputError:
        raise
    except CorpusError as exc:
        raise InputError(f"{prefix}{exc}") from None


def record_to_dict(record: ProblemRecord) -> dict:
    out: dict = {
        "id": record.id,
        "body": record.body,
        "question": record.question,
        "equations": list(record.equations),
        "answer": record.answer,
    }
    if record.formula is not None:
        out["formula"] = record.formula
    if record.problem_type is not None:
        out["problem_type"] = record.problem_type.name
    if record.grade is not None:
        out["grade"] = record.grade
    if record.source is not None:
        out["source"] = record.source
    return out


def load_canonical(path, warnings: list[str] | None = None) -> Corpus:
    path = Path(path)
    problems: list[ProblemRecord] = []
    first_line: dict[str, int] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}: line {lineno}: malformed record ({exc.msg})") from None
            try:
                record = record_from_dict(obj, f"line {lineno}", warnings)
            except InputError as exc:
                raise InputError(f"{path}: {exc}") from None
            if record.id in first_line:
                raise InputError(
                    f"{path}: line {lineno}: duplicate id {record.id!r} (first seen on line {first_line[record.id]})"
                )
            first_line[record.id] = lineno
            problems.append(record)
    return Corpus(path.stem, tuple(problems))


def save_canonical(corpus: Corpus, path) -> None:
    lines = [json.dumps(record_to_dict(p), ensure_ascii=False) + "\n" for p in corpus.problems]
    atomic_write(path, "".join(lines))


# -- ASDiv ---------------------------------------------------------------------

def _child_text(elem: ET.Element, tag: str) -> str | None:
    child = elem.find(tag)
    if child is None:
        return None
    return "".join(child.itertext()).strip()


def load_asdiv(path, warnings: list[str] | None = None) -> Corpus:
    """Read the public ASDiv XML release.

    Expected layout: ``<ProblemSet>`` holding ``<Problem ID=.. Grade=.. Source=..>``
    elements with ``Body``, ``Question``, ``Solution-Type``, ``Answer`` and
    ``Formula`` children. The formula is kept as the single equation string.
    """
    path = Path(path)
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as exc:
        raise InputError(f"{path}: not well-formed XML ({exc})") from None
    elems = list(root.iter("Problem"))
    if not elems:
        raise InputError(f"{path}: no <Problem> elements found")
    problems = []
    seen: set[str] = set()
    for index, elem in enumerate(elems, 1):
        pid = elem.get("ID")
        where = f"{path}: Problem #{index}" + (f" (ID={pid})" if pid else "")
        if not pid:
            raise InputError(f"{where}: missing ID attribute")
        if pid in seen:
            raise InputError(f"{where}: duplicate id {pid!r}")
        seen.add(pid)
        body = _child_text(elem, "Body")
        if body is None:
            raise InputError(f"{where}: missing <Body>")
        question = _child_text(elem, "Question") or ""
        answer = _child_text(elem, "Answer")
        if answer is None:
            raise InputError(f"{where}: missing <Answer>")
        formula = _child_text(elem, "Formula")
        stype = _child_text(elem, "Solution-Type")
        grade_attr = elem.get("Grade")
        grade = None
        if grade_attr:
            try:
                grade = int(grade_attr)
            except ValueError:
                raise InputError(f"{where}: non-integer Grade {grade_attr!r}") from None
        try:
            problems.append(ProblemRecord(
                id=pid,
                body=body,
                question=question,
                equations=(formula,) if formula else (),
                answer=answer,
                problem_type=ProblemType.from_name(stype) if stype else None,
                grade=grade,
                source=elem.get("Source") or None,
            ))
        except CorpusError as exc:
            raise InputError(f"{where}: {exc}") from None
    return Corpus(path.stem, tuple(problems))


# -- MathQA --------------------------------------------------------------------

_OPTION_RE = re.compile(r"([a-e])\s*\)\s*(.*?)\s*(?=,\s*[a-e]\s*\)|$)", re.S)


def parse_options(options) -> dict[str, str]:
    """Split a MathQA options field into ``{letter: text}``.

    Accepts the string form ``"a ) 3327 , b ) 3237 , ..."`` and the list form.
    """
    if isinstance(options, list):
        options = " , ".join(str(o) for o in options)
    if not isinstance(options, str):
        return {}
    return {m.group(1): m.group(2).strip() for m in _OPTION_RE.finditer(options.strip())}


def load_mathqa(path, warnings: list[str] | None = None) -> Corpus:
    """Read a MathQA split (a JSON array of problem objects).

    Ids are ``<file stem>-<index>`` since the release has none. The step
    formula comes from ``linear_formula`` (pipe separated) when present,
    otherwise ``annotated_formula``.
    """
    path = Path(path)
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a JSON array of problems")
    problems = []
    width = max(5, len(str(len(data))))
    for index, item in enumerate(data):
        where = f"{path}: element {index}"
        if not isinstance(item, dict):
            raise InputError(f"{where}: expected an object")
        for key in ("Problem", "options", "correct"):
            if key not in item:
                raise InputError(f"{where}: missing field {key}")
        pid = f"{path.stem}-{index:0{width}d}"
        formula = (item.get("linear_formula") or item.get("annotated_formula") or "").strip()
        options = parse_options(item["options"])
        letter = str(item["correct"]).strip().lower()
        answer = options.get(letter)
        if answer is None:
            _warn(warnings, f"{where}: correct option {letter!r} not among options; answer left empty")
            answer = ""
        category = item.get("category")
        problems.append(ProblemRecord(
            id=pid,
            body=item["Problem"].strip(),
            question="",
            formula=formula or None,
            answer=answer,
            problem_type=ProblemType.from_name(category) if category else None,
            source="mathqa",
        ))
    return Corpus(path.stem, tuple(problems))


LOADERS = {
    "canonical": load_canonical,
    "asdiv": load_asdiv,
    "mathqa": load_mathqa,
}


def load_corpus(path, fmt: str = "canonical", warnings: list[str] | None = None) -> Corpus:
    try:
        loader = LOADERS[fmt]
    except KeyError:
        raise InputError(f"unknown corpus format {fmt!r}") from None
    return loader(path, warnings)
