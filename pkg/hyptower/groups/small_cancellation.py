# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""One-relator small cancellation: symmetrization, pieces and Dehn's algorithm.

For a presentation satisfying C'(1/6), every freely reduced non-trivial word that is trivial in the group contains
more than half of some symmetrized relator as a subword. Replacing that subword by the inverse of the rest of the
relator shortens the word, so repeating the replacement decides the word problem.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable

from hyptower.errors import UnsupportedModelError
from hyptower.words import CyclicWord, GeneratorSymbol, Word, cyclic_reduce

from .presentation import Presentation


__all__ = (
    "symmetrize",
    "max_piece_length",
    "is_proper_power",
    "satisfies_c_prime_sixth",
    "DehnRewriter",
)

logger = logging.getLogger("hyptower.groups")


def symmetrize(presentation: Presentation) -> frozenset[Word]:
    """Every rotation of the single relator and of its inverse, as linear words.

    Raises
    ------
    UnsupportedModelError
        Unless the presentation has exactly one relator.
    """
    if len(presentation.relators) != 1:
        raise UnsupportedModelError(
            f"symmetrization needs exactly one relator, {presentation} has {len(presentation.relators)}"
        )
    relator = presentation.relators[0]
    return frozenset(relator.rotations() + relator.inverse().rotations())


def _common_prefix(first: tuple[GeneratorSymbol, ...], second: tuple[GeneratorSymbol, ...]) -> int:
    length = 0
    for x, y in zip(first, second):
        if x != y:
            break
        length += 1
    return length


def is_proper_power(relator: CyclicWord) -> bool:
    """Whether the relator is ``u^k`` for some ``k >= 2``."""
    symbols = relator.representative.symbols
    return any(symbols[k:] + symbols[:k] == symbols for k in range(1, len(symbols)))


def max_piece_length(symmetrized: Iterable[Word]) -> int:
    """The length of the longest piece.

    A piece is a common prefix of two distinct elements of the symmetrized set. A relator with a non-trivial
    rotational symmetry contributes a piece of length one less than the relator.
    """
    elements = sorted(symmetrized, key=lambda word: tuple(word.symbols))
    longest = 0
    for i, first in enumerate(elements):
        for second in elements[i + 1 :]:
            longest = max(longest, _common_prefix(first.symbols, second.symbols))
        if is_proper_power(CyclicWord(first)):
            longest = max(longest, len(first) - 1)
    return longest


def satisfies_c_prime_sixth(presentation: Presentation) -> bool:
    """Whether every piece is shorter than a sixth of the relator."""
    symmetrized = symmetrize(presentation)
    return 6 * max_piece_length(symmetrized) < len(presentation.relators[0])


class DehnRewriter:
    """Dehn's algorithm for a one-relator C'(1/6) presentation.

    Parameters
    ----------
    presentation : Presentation
        A one-relator presentation. Its small cancellation condition is not checked here.
    step_limit : int
        Maximum number of replacements before giving up.
    """

    __slots__ = ("_presentation", "_by_first", "_relator_length", "_step_limit")

    def __init__(self, presentation: Presentation, step_limit: int = 10000):
        self._presentation = presentation
        self._relator_length = len(presentation.relators[0])
        self._step_limit = step_limit
        by_first: defaultdict[GeneratorSymbol, list[tuple[GeneratorSymbol, ...]]] = defaultdict(list)
        for element in sorted(symmetrize(presentation), key=lambda word: tuple(word.symbols)):
            by_first[element.symbols[0]].append(element.symbols)
        self._by_first = dict(by_first)

    @property
    def presentation(self) -> Presentation:
        """The presentation being rewritten against."""
        return self._presentation

    def _rewrite_once(self, word: Word) -> Word | None:
        symbols = word.symbols
        for position, symbol in enumerate(symbols):
            for element in self._by_first.get(symbol, ()):
                matched = _common_prefix(symbols[position:], element)
                if 2 * matched > self._relator_length:
                    rest = Word._trusted(word.alphabet, element[matched:])
                    head = Word._trusted(word.alphabet, symbols[:position])
                    tail = Word._trusted(word.alphabet, symbols[position + matched :])
                    return head * ~rest * tail
        return None

    def reduce(self, word: Word, *, cyclic: bool = False) -> Word:
        """Apply replacements until none applies.

        With ``cyclic`` the word is cyclically reduced before each pass, which preserves only the conjugacy class.
        """
        if cyclic:
            word = cyclic_reduce(word)[0].representative
        for _ in range(self._step_limit):
            rewritten = self._rewrite_once(word)
            if rewritten is None:
                return word
            logger.debug("Dehn step %s -> %s", word, rewritten)
            word = cyclic_reduce(rewritten)[0].representative if cyclic else rewritten
        raise UnsupportedModelError(f"Dehn's algorithm did not finish within {self._step_limit} steps on {word}")

    def is_trivial(self, word: Word) -> bool:
        """Whether the word is trivial in the group."""
        return self.reduce(word.over(self._presentation.alphabet), cyclic=True).is_identity
