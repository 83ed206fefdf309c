"""Schur rings over Z_2^n: words, S-partitions, codes, named S-subgroups and autocorrelation."""

from __future__ import annotations

from schurlab.codes import CodeSet, generated_subgroup, is_code
from schurlab.perm_groups import CapExceeded, PermGroupSpec, group, partition
from schurlab.words import Word, parse_word, render_word

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CodeSet",
    "PermGroupSpec",
    "Word",
    "generated_subgroup",
    "group",
    "is_code",
    "parse_word",
    "partition",
    "render_word",
]
