"""Tokenization, tagging, lemmatization and meta-symbol normalization of problem text."""

from .lemmatizer import lemmatize
from .pipeline import (
    STOP_WORDS,
    AnnotationSidecar,
    NormalizedProblem,
    TokenAnnotation,
    annotate,
    normalize_corpus,
    normalize_problem,
    normalize_tokens,
)
from .tagger import pos_tag
from .tokenizer import detokenize, tokenize

__all__ = [
    "STOP_WORDS", "AnnotationSidecar", "NormalizedProblem", "TokenAnnotation", "annotate",
    "detokenize", "lemmatize", "normalize_corpus", "normalize_problem", "normalize_tokens",
    "pos_tag", "tokenize",
]
