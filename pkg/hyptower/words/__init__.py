# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Words in free groups: alphabets, reduction, cyclic words and commutator recognition."""

__all__ = (
    "GENERATOR_NAME",
    "Alphabet",
    "GeneratorSymbol",
    "Word",
    "CyclicWord",
    "WicksWitness",
    "parse_word",
    "reduce",
    "compose",
    "invert",
    "conjugate",
    "commutator",
    "random_word",
    "cyclic_reduce",
    "canonical_rotation",
    "is_genus_one_commutator",
)

from .alphabet import GENERATOR_NAME, Alphabet, GeneratorSymbol
from .cyclic import CyclicWord, canonical_rotation, cyclic_reduce
from .wicks import WicksWitness, is_genus_one_commutator
from .word import Word, commutator, compose, conjugate, invert, parse_word, random_word, reduce
