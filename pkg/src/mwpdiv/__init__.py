"""Measure lexical and syntactic diversity of math word problem corpora and check annotation consistency."""

__version__ = "0.1.0"
