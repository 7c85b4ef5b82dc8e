"""Penn-Treebank-style word tokenizer."""

from __future__ import annotations

import re

META_RE = re.compile(r"\[(?:NUM|NAME)[1-9]\d*\]")

# 1,275  0.75  3/4  .5
NUMERIC_TOKEN_RE = re.compile(
    r"[-+]?(?:(?:\d{1,3}(?:,\d{3})+|\d+)(?:\.\d+)?|\.\d+)(?:/\d+(?:\.\d+)?)?"
)

ABBREVIATIONS = frozenset(
    "mr. mrs. ms. dr. st. jr. sr. prof. vs. etc. e.g. i.e. a.m. p.m. inc. ltd. approx.".split()
)

_QUOTES = str.maketrans({
    "‘": "'", "’": "'", "‚": "'", "“": '"', "”": '"', "„": '"',
    "−": "-", "–": "-", "—": "--", " ": " ", "×": "*", "÷": "/",
})

_LEADING = set("([{\"'`$£€#")
_TRAILING = set(")]}\"',;:?!%")
_CLITICS = frozenset({"n't", "'s", "'re", "'ve", "'ll", "'d", "'m"})
_CONTRACTION_RE = re.compile(r"(?i)^(.+?)(n't|'s|'re|'ve|'ll|'d|'m|')$")


def _split_trailing(chunk: str) -> tuple[str, list[str]]:
    trail: list[str] = []
    while chunk:
        if META_RE.fullmatch(chunk):
            break
        last = chunk[-1]
        if chunk.endswith("..."):
            trail.append("...")
            chunk = chunk[:-3]
        elif last == ".":
            lower = chunk.lower()
            if lower in ABBREVIATIONS or re.fullmatch(r"(?:[A-Za-z]\.){2,}", chunk):
                break
            trail.append(".")
            chunk = chunk[:-1]
        elif last in _TRAILING:
            # keep a possessive/contraction apostrophe attached for the contraction pass
            if last == "'" and len(chunk) > 1 and chunk[-2] in "sS" and not chunk.startswith("'"):
                break
            trail.append(last)
            chunk = chunk[:-1]
        else:
            break
    trail.reverse()
    return chunk, trail


def _split_inner(chunk: str) -> list[str]:
    if not chunk:
        return []
    if META_RE.fullmatch(chunk) or NUMERIC_TOKEN_RE.fullmatch(chunk):
        return [chunk]
    m = _CONTRACTION_RE.match(chunk)
    if m and re.search(r"[A-Za-z]", m.group(1)):
        return _split_inner(m.group(1)) + [m.group(2)]
    # "a,b" -> "a" "," "b" unless it is a digit group
    parts = re.split(r"(?<!\d),|,(?!\d)", chunk)
    if len(parts) > 1:
        out: list[str] = []
        for k, part in enumerate(parts):
            if k:
                out.append(",")
            out.extend(_split_inner(part))
        return out
    return [chunk]


def tokenize(text: str) -> list[str]:
    """Split ``text`` into word tokens.

    Punctuation is separated, decimals, digit-grouped numbers and simple
    fractions stay whole, currency symbols become their own token, and
    clitics are split (``don't`` -> ``do n't``, ``Tim's`` -> ``Tim 's``).
    Meta symbols such as ``[NUM1]`` survive as single tokens.

    >>> tokenize("priced at $0.75.")
    ['priced', 'at', '$', '0.75', '.']
    """
    text = text.translate(_QUOTES)
    tokens: list[str] = []
    for chunk in text.split():
        lead: list[str] = []
        while chunk and chunk[0] in _LEADING and not META_RE.match(chunk):
            if chunk.lower() in _CLITICS:
                break
            lead.append(chunk[0])
            chunk = chunk[1:]
        chunk, trail = _split_trailing(chunk)
        tokens.extend(lead)
        tokens.extend(_split_inner(chunk))
        tokens.extend(trail)
    return [t for t in tokens if t]


def detokenize(tokens) -> str:
    return " ".join(tokens)
