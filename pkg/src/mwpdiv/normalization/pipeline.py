"""Problem text -> meta-symbol lemma sequence plus POS sequence."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from ..corpus import CorpusError, ProblemRecord
from .lemmatizer import lemmatize
from .tagger import FIRST_NAMES, TITLES, _load_list, is_numeric, pos_tag
from .tokenizer import META_RE, tokenize

STOP_WORDS = _load_list("stopwords.txt")
CURRENCY = frozenset("$£€")
_TITLE_KEYS = frozenset(t.lower().rstrip(".") for t in TITLES)


@dataclass(frozen=True)
class TokenAnnotation:
    surface: str
    pos: str
    lemma: str

    def __post_init__(self):
        if not self.surface or not self.lemma:
            raise ValueError("token annotations need a non-empty surface and lemma")


@dataclass(frozen=True)
class NormalizedProblem:
    id: str
    norm_tokens: tuple[str, ...]
    pos_tokens: tuple[str, ...]

    def channel(self, channel: str) -> tuple[str, ...]:
        if channel == "lexical":
            return self.norm_tokens
        if channel == "syntactic":
            return self.pos_tokens
        raise ValueError(f"unknown channel {channel!r}")


class AnnotationSidecar(dict):
    """Externally produced annotations: ``id -> (tokens, pos, lemmas)``."""

    @classmethod
    def load(cls, path) -> "AnnotationSidecar":
        path = Path(path)
        out = cls()
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                if not line.strip():
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise CorpusError(f"{path}: line {lineno}: malformed record ({exc.msg})") from None
                try:
                    pid, toks, tags, lemmas = obj["id"], obj["tokens"], obj["pos"], obj["lemmas"]
                except (KeyError, TypeError) as exc:
                    raise CorpusError(f"{path}: line {lineno}: missing field {exc}") from None
                if not (len(toks) == len(tags) == len(lemmas)):
                    raise CorpusError(f"{path}: line {lineno}: tokens/pos/lemmas lengths differ for {pid!r}")
                if pid in out:
                    raise CorpusError(f"{path}: line {lineno}: duplicate id {pid!r}")
                out[pid] = (tuple(toks), tuple(tags), tuple(lemmas))
        return out


def annotate(text: str) -> list[TokenAnnotation]:
    tokens = tokenize(text)
    tags = pos_tag(tokens)
    return [TokenAnnotation(t, p, lemmatize(t, p)) for t, p in zip(tokens, tags)]


def _is_quantity(token: str, tag: str) -> bool:
    return tag == "CD" or is_numeric(token) or token.startswith("[NUM") and META_RE.fullmatch(token) is not None


def _starts_name(token: str) -> bool:
    return token in FIRST_NAMES or token.lower().rstrip(".") in _TITLE_KEYS or (
        token.startswith("[NAME") and META_RE.fullmatch(token) is not None
    )


def normalize_tokens(tokens, tags, lemmas) -> list[str]:
    """Substitute quantities and person names, then drop stop words.

    Each quantity occurrence gets the next ``[NUMk]``; a currency symbol right
    before a quantity is folded into it. A maximal run of proper-noun tokens
    that contains a known first name (or starts with a title) becomes one
    ``[NAMEk]``, reusing ``k`` for a repeated surface form.
    """
    n = len(tokens)
    slots: list[str | None] = list(lemmas)
    num_k = 0
    i = 0
    while i < n:
        if tokens[i] in CURRENCY and i + 1 < n and _is_quantity(tokens[i + 1], tags[i + 1]):
            num_k += 1
            slots[i] = None
            slots[i + 1] = f"[NUM{num_k}]"
            i += 2
            continue
        if _is_quantity(tokens[i], tags[i]):
            num_k += 1
            slots[i] = f"[NUM{num_k}]"
        i += 1

    names: dict[str, int] = {}
    i = 0
    while i < n:
        if tags[i] in ("NNP", "NNPS") and slots[i] is not None and not slots[i].startswith("[NUM"):
            j = i
            while j < n and tags[j] in ("NNP", "NNPS") and slots[j] is not None and not slots[j].startswith("[NUM"):
                j += 1
            run = tokens[i:j]
            if any(_starts_name(t) for t in run):
                key = " ".join(run)
                k = names.setdefault(key, len(names) + 1)
                slots[i] = f"[NAME{k}]"
                for m in range(i + 1, j):
                    slots[m] = None
            i = j
        else:
            i += 1

    out = []
    for tok, slot in zip(tokens, slots):
        if slot is None:
            continue
        if slot.startswith("[") and META_RE.fullmatch(slot):
            out.append(slot)
        elif slot not in STOP_WORDS and tok.lower() not in STOP_WORDS:
            out.append(slot)
    return out


def normalize_problem(record: ProblemRecord, sidecar: Mapping | None = None) -> NormalizedProblem:
    text = record.text
    if sidecar is not None and record.id in sidecar:
        tokens, tags, lemmas = sidecar[record.id]
    else:
        if not text.strip():
            raise CorpusError(f"problem {record.id!r} has empty text")
        annotations = annotate(text)
        tokens = [a.surface for a in annotations]
        tags = [a.pos for a in annotations]
        lemmas = [a.lemma for a in annotations]
    return NormalizedProblem(
        record.id,
        tuple(normalize_tokens(tokens, tags, lemmas)),
        tuple(tags),
    )


def normalize_corpus(problems: Iterable[ProblemRecord], sidecar: Mapping | None = None) -> list[NormalizedProblem]:
    return [normalize_problem(p, sidecar) for p in problems]
