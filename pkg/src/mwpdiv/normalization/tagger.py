"""Baseline Penn Treebank tagger: lexicon lookup, suffix rules and a left-to-right context pass."""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

from . import lexicon as lx
from .tokenizer import META_RE, NUMERIC_TOKEN_RE

PUNCT_TAGS = {
    ".": ".", "?": ".", "!": ".", ",": ",", ";": ":", ":": ":", "--": ":", "-": ":", "...": ":",
    "(": "-LRB-", ")": "-RRB-", "[": "-LRB-", "]": "-RRB-", "{": "-LRB-", "}": "-RRB-",
    '"': "''", "``": "``", "''": "''", "`": "``", "$": "$", "£": "$", "€": "$", "#": "#", "%": "NN",
    "&": "CC", "+": "SYM", "=": "SYM", "*": "SYM", "/": "SYM", "<": "SYM", ">": "SYM",
}

CLITIC_TAGS = {"n't": "RB", "'re": "VBP", "'ve": "VBP", "'m": "VBP", "'ll": "MD", "'d": "MD"}

NOUN_TAGS = ("NN", "NNS")
VERB_TAGS = ("VB", "VBP", "VBZ", "VBD", "VBN", "VBG")
_PRENOMINAL = {"DT", "PRP$", "POS", "CD", "JJ", "JJR", "JJS", "PDT", "WP$"}
_SUBJECT = {"NNP", "NNPS", "PRP", "NN", "NNS", "WP", "WDT", "EX"}
_BE = {"be", "am", "is", "are", "was", "were", "been", "being", "'s", "'re", "'m"}
_HAVE = {"have", "has", "had", "having", "'ve", "'d"}
_CLOSED: dict[str, tuple[str, ...]] = {}
for _tag, _words in lx.CLOSED_CLASS.items():
    for _w in _words.split():
        _CLOSED[_w] = _CLOSED.get(_w, ()) + (_tag,)


def _load_list(name: str) -> frozenset[str]:
    text = resources.files(__package__).joinpath("data").joinpath(name).read_text(encoding="utf-8")
    return frozenset(line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#"))


FIRST_NAMES = _load_list("first_names.txt")
TITLES = _load_list("titles.txt")
_PROPER = FIRST_NAMES | TITLES | set(lx.MONTHS_AND_DAYS)


def is_numeric(token: str) -> bool:
    return bool(NUMERIC_TOKEN_RE.fullmatch(token)) or bool(re.fullmatch(r"\d+(?::\d+)+", token))


def _suffix_tag(lower: str) -> str:
    if lower.endswith("ing") and len(lower) > 4:
        return "VBG"
    if lower.endswith("ed") and len(lower) > 3:
        return "VBD"
    if lower.endswith("ly") and len(lower) > 3:
        return "RB"
    if lower.endswith("est") and lower[:-3] in lx.ADJECTIVE_SET:
        return "JJS"
    if lower.endswith("er") and (lower[:-2] in lx.ADJECTIVE_SET or lower[:-3] in lx.ADJECTIVE_SET
                                 or lower[:-3] + "y" in lx.ADJECTIVE_SET):
        return "JJR"
    if re.search(r"(ous|ful|ive|able|ible|ical|less|ish)$", lower):
        return "JJ"
    if re.search(r"(tion|sion|ment|ness|ity|ship|hood|ance|ence)$", lower):
        return "NN"
    if lower.endswith("s") and not lower.endswith(("ss", "us", "is")) and len(lower) > 3:
        return "NNS"
    if re.fullmatch(r"[a-z]+-[a-z-]+", lower):
        return "JJ"
    return "NN"


@lru_cache(maxsize=65536)
def _lexical_tags(token: str, initial: bool) -> tuple[str, ...]:
    """Candidate tags for a token, most likely first (context-free)."""
    if META_RE.fullmatch(token):
        return ("CD",) if token.startswith("[NUM") else ("NNP",)
    if token in PUNCT_TAGS:
        return (PUNCT_TAGS[token],)
    lower = token.lower()
    if lower in CLITIC_TAGS:
        return (CLITIC_TAGS[lower],)
    if lower == "'s":
        return ("POS", "VBZ")
    if token == "'":
        return ("POS",)
    if is_numeric(token) or lower in lx.NUMBER_WORDS:
        return ("CD",)
    capitalized = token[:1].isupper()
    if capitalized and (token in _PROPER or token.rstrip(".") in TITLES or lower in lx.PROPER_TITLES):
        if not (initial and lower in _CLOSED):
            return ("NNP",)
    if capitalized and not initial and lower not in _CLOSED:
        return ("NNP",)
    tags: list[str] = []
    if lower in ("more", "less", "fewer"):
        tags.append("JJR")
    elif lower in ("most", "least"):
        tags.append("JJS")
    if lower in _CLOSED:
        tags.extend(t for t in _CLOSED[lower] if t not in tags)
    if lower in lx.NOUN_BASES:
        tags.append("NN")
    if lower in lx.NOUN_PLURALS:
        tags.append("NNS")
    if lower in lx.VERB_FORMS:
        tags.extend(t for t in lx.VERB_FORMS[lower] if t not in tags)
        if "VB" in tags and "VBP" not in tags:
            tags.append("VBP")
    if lower in lx.ADJECTIVE_SET or lower in lx.ORDINALS:
        tags.append("JJ")
    if lower in lx.IRREGULAR_ADJECTIVES and not tags:
        tags.append("JJR" if lower.endswith("er") else "JJS")
    if tags:
        return tuple(tags)
    if capitalized and not initial:
        return ("NNP",)
    if re.search(r"[a-z]/[a-z]", lower):
        return ("NN",)
    tag = _suffix_tag(lower)
    return ("VBD", "VBN") if tag == "VBD" else (tag,)


def _prefer(cands, order):
    for t in order:
        if t in cands:
            return t
    return None


def _choose(cands: tuple[str, ...], prev_tag: str, prev_lower: str, next_token: str | None,
            sentence_start: bool, seen_verb: bool) -> str:
    if len(cands) == 1:
        return cands[0]
    nxt = next_token.lower() if next_token else ""
    if prev_tag in ("TO", "MD"):
        t = _prefer(cands, ("VB",))
        if t:
            return t
    if prev_lower in _HAVE:
        t = _prefer(cands, ("VBN",))
        if t:
            return t
    if prev_lower in _BE:
        t = _prefer(cands, ("VBG", "VBN", "JJ"))
        if t:
            return t
    if "PRP$" in cands and "PRP" in cands:
        # her book / gave her 3
        nxt_tags = _lexical_tags(next_token, False) if next_token else ()
        if any(t in ("NN", "NNS", "JJ", "JJR", "JJS", "NNP") for t in nxt_tags[:1]):
            return "PRP$"
        return "PRP"
    if "POS" in cands and "VBZ" in cands:
        return "VBZ" if prev_tag in ("PRP", "EX", "WP", "WDT", "WRB") or prev_lower in ("that", "here") else "POS"
    if prev_tag in _PRENOMINAL:
        t = _prefer(cands, ("NN", "NNS", "JJ", "JJR", "JJS", "VBG"))
        if t:
            return t
    if sentence_start and "VB" in cands:
        if nxt in ("the", "a", "an", "how", "what", "his", "her", "their", "its", "out", "each") or is_numeric(nxt):
            return "VB"
    if prev_tag in _SUBJECT and not seen_verb:
        verb = _prefer(cands, ("VBZ", "VBD", "VBP"))
        # a base form after a singular noun is usually a noun compound
        if verb and not (verb == "VBP" and prev_tag in ("NN", "NNP")):
            return verb
    t = _prefer(cands, ("IN",)) if "DT" in cands and nxt in ("the", "a", "an", "he", "she", "they", "it", "there") else None
    if t:
        return t
    return cands[0]


def pos_tag(tokens) -> list[str]:
    """Tag ``tokens`` with Penn Treebank tags.

    >>> pos_tag(["Mary", "has", "5", "books"])
    ['NNP', 'VBZ', 'CD', 'NNS']
    """
    tags: list[str] = []
    prev_tag, prev_lower = ".", ""
    sentence_start = True
    seen_verb = False
    for i, tok in enumerate(tokens):
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        cands = _lexical_tags(tok, sentence_start)
        tag = _choose(cands, prev_tag, prev_lower, nxt, sentence_start, seen_verb)
        tags.append(tag)
        if tag.startswith("VB") and tag != "VBG":
            seen_verb = True
        sentence_start = tag == "."
        if sentence_start:
            seen_verb = False
        prev_tag, prev_lower = tag, tok.lower()
    return tags
