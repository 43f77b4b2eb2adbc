# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Whitehead minimization, primitivity and basis tests."""
from __future__ import annotations

import logging
from collections.abc import Sequence

from hyptower.words import Alphabet, Word, cyclic_reduce

from .automorphisms import WhiteheadAutomorphism, rank_alphabet, whitehead_generators
from .folding import generates_whole_group


__all__ = ("total_cyclic_length", "minimize", "is_primitive", "is_basis")

logger = logging.getLogger("hyptower.whitehead")


def _cyclic(word: Word) -> Word:
    return cyclic_reduce(word)[0].representative


def total_cyclic_length(words: Sequence[Word]) -> int:
    """Sum of the cyclically reduced lengths."""
    return sum(len(_cyclic(word)) for word in words)


def minimize(
    words: Sequence[Word], rank: int | Alphabet
) -> tuple[tuple[Word, ...], tuple[WhiteheadAutomorphism, ...]]:
    """Reduce total cyclic length with Whitehead automorphisms until no single one helps.

    The first automorphism in table order that strictly shortens the tuple is applied each round, so runs are
    deterministic. By peak reduction the result has minimal total length in its automorphic orbit.

    Returns
    -------
    tuple[tuple[Word, ...], tuple[WhiteheadAutomorphism, ...]]
        The cyclically reduced minimized words and the automorphisms applied, in order.
    """
    alphabet = rank_alphabet(rank)
    current = tuple(_cyclic(word.over(alphabet)) for word in words)
    length = total_cyclic_length(current)
    applied: list[WhiteheadAutomorphism] = []
    table = [automorphism for automorphism in whitehead_generators(alphabet) if automorphism.kind == 2]
    improved = True
    while improved:
        improved = False
        for automorphism in table:
            candidate = tuple(automorphism.apply_cyclic(word) for word in current)
            candidate_length = sum(map(len, candidate))
            if candidate_length < length:
                logger.debug("Whitehead move %s: %d -> %d", automorphism, length, candidate_length)
                current, length = candidate, candidate_length
                applied.append(automorphism)
                improved = True
                break
    return current, tuple(applied)


def is_primitive(word: Word, rank: int | Alphabet) -> bool:
    """Whether the word is part of some basis."""
    minimized, _ = minimize([word], rank)
    return total_cyclic_length(minimized) == 1


def is_basis(words: Sequence[Word], rank: int | Alphabet) -> bool:
    """Whether the words form a basis.

    Minimization must reach distinct single letters, and the Stallings graph of the words must be the rose, since
    cyclic reduction alone forgets conjugators.
    """
    alphabet = rank_alphabet(rank)
    if len(words) != len(alphabet):
        return False
    minimized, _ = minimize(words, alphabet)
    if any(len(word) != 1 for word in minimized) or len({word[0].name for word in minimized}) != len(minimized):
        return False
    return generates_whole_group(words, alphabet)
