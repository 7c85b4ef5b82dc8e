"""POS-keyed English lemmatizer: exception tables first, then suffix rules."""

from __future__ import annotations

import re
from functools import lru_cache

from . import lexicon as lx
from .tokenizer import META_RE

_VERB_EXCEPTIONS: dict[str, str] = {}
for _form, _by_tag in lx.VERB_FORMS.items():
    for _base in _by_tag.values():
        _VERB_EXCEPTIONS.setdefault(_form, _base)
_VERB_EXCEPTIONS.update(lx.IRREGULAR_VERB_FORMS)


def _pick(candidates, known):
    for c in candidates:
        if c in known:
            return c
    return None


def _noun_lemma(w: str) -> str:
    if w in lx.NOUN_PLURALS:
        return lx.NOUN_PLURALS[w]
    if w in lx.IRREGULAR_NOUNS:
        return lx.IRREGULAR_NOUNS[w]
    if len(w) <= 3 or w.endswith(("ss", "us", "is")) or not w.endswith("s"):
        return w
    if w.endswith("ies"):
        return _pick([w[:-1], w[:-3] + "y"], lx.NOUN_BASES) or w[:-3] + "y"
    if w.endswith("ves"):
        return _pick([w[:-1], w[:-3] + "f", w[:-3] + "fe"], lx.NOUN_BASES) or w[:-1]
    if w.endswith("es"):
        found = _pick([w[:-1], w[:-2]], lx.NOUN_BASES)
        if found:
            return found
        if re.search(r"(ch|sh|x|z|ss|o)es$", w):
            return w[:-2]
    return w[:-1]


def _verb_lemma(w: str) -> str:
    if w in _VERB_EXCEPTIONS:
        return _VERB_EXCEPTIONS[w]
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ied") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ed") and len(w) > 3:
        stem = w[:-2]
        undoubled = stem[:-1] if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in "lsz" else None
        found = _pick([c for c in (stem, stem + "e", undoubled) if c], lx.VERB_BASES)
        if found:
            return found
        if undoubled:
            return undoubled
        if re.search(r"(?:[^aeiou][aeiou][^aeiouwxy]|[cgsvz]|[^aeiou][lr]|u)$", stem) and len(stem) <= 5:
            return stem + "e"
        return stem
    if w.endswith("ing") and len(w) > 4:
        stem = w[:-3]
        undoubled = stem[:-1] if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in "lsz" else None
        found = _pick([c for c in (stem, stem + "e", undoubled) if c], lx.VERB_BASES)
        if found:
            return found
        if undoubled:
            return undoubled
        if stem.endswith("y") and len(stem) >= 2 and stem[-2] not in "aeiou":
            return stem[:-1] + "ie" if len(stem) <= 2 else stem
        if re.search(r"(?:[^aeiou][aeiou][^aeiouwxy]|[cgsvz]|[^aeiou][lr]|u)$", stem) and len(stem) <= 5:
            return stem + "e"
        return stem
    if w.endswith("es") and len(w) > 3:
        found = _pick([w[:-1], w[:-2]], lx.VERB_BASES)
        if found:
            return found
        if re.search(r"(ch|sh|x|z|ss|o)es$", w):
            return w[:-2]
        return w[:-1]
    if w.endswith("s") and not w.endswith("ss") and len(w) > 3:
        return w[:-1]
    return w


def _adjective_lemma(w: str) -> str:
    if w in lx.IRREGULAR_ADJECTIVES:
        return lx.IRREGULAR_ADJECTIVES[w]
    for suffix in ("est", "er"):
        if w.endswith(suffix):
            stem = w[: -len(suffix)]
            undoubled = stem[:-1] if len(stem) > 2 and stem[-1] == stem[-2] else None
            cands = [stem, stem + "e", undoubled, stem[:-1] + "y" if stem.endswith("i") else None]
            found = _pick([c for c in cands if c], lx.ADJECTIVE_SET)
            if found:
                return found
    return w


@lru_cache(maxsize=131072)
def lemmatize(token: str, pos: str) -> str:
    """Lowercase lemma of ``token`` given its Penn Treebank tag.

    >>> lemmatize("bought", "VBD")
    'buy'
    """
    if not token:
        raise ValueError("cannot lemmatize an empty token")
    if META_RE.fullmatch(token):
        return token
    w = token.lower()
    if not re.search(r"[a-z]", w):
        return w
    if pos in ("NNS", "NNPS"):
        return _noun_lemma(w)
    if pos.startswith("VB") or pos == "MD" and w in _VERB_EXCEPTIONS:
        return _verb_lemma(w)
    if pos in ("JJR", "JJS", "RBR", "RBS"):
        return _adjective_lemma(w)
    if pos == "POS":
        return w
    return w
