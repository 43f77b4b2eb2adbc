# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Cyclic words and cyclic reduction."""
from __future__ import annotations

from .alphabet import Alphabet, GeneratorSymbol
from .word import Word


__all__ = ("CyclicWord", "cyclic_reduce", "canonical_rotation")


def canonical_rotation(symbols: tuple[GeneratorSymbol, ...]) -> tuple[GeneratorSymbol, ...]:
    """The lexicographically least rotation, ordering symbols by name and then positive before negative."""
    if not symbols:
        return symbols
    keys = [(symbol.name, symbol.sign < 0) for symbol in symbols]
    start = min(range(len(symbols)), key=lambda i: keys[i:] + keys[:i])
    return symbols[start:] + symbols[:start]


def cyclic_reduce(word: Word) -> tuple[CyclicWord, Word]:
    """Strip matching inverse letters from both ends.

    Returns
    -------
    tuple[CyclicWord, Word]
        The cyclically reduced core ``c`` and the conjugator ``u`` with ``word = u c u^-1``.
    """
    symbols = word.symbols
    i, j = 0, len(symbols) - 1
    while i < j and symbols[i].name == symbols[j].name and symbols[i].sign == -symbols[j].sign:
        i += 1
        j -= 1
    core = Word._trusted(word.alphabet, symbols[i : j + 1])
    conjugator = Word._trusted(word.alphabet, symbols[:i])
    return CyclicWord._from_reduced(core), conjugator


class CyclicWord:
    """A cyclically reduced word considered up to rotation.

    Building one from any word cyclically reduces it first, dropping the conjugator.
    """

    __slots__ = ("_word", "_canonical")

    def __init__(self, word: Word):
        core, _ = cyclic_reduce(word)
        self._word = core._word
        self._canonical = core._canonical

    @classmethod
    def _from_reduced(cls, word: Word) -> CyclicWord:
        cyclic = cls.__new__(cls)
        cyclic._word = word
        cyclic._canonical = canonical_rotation(word.symbols)
        return cyclic

    @property
    def representative(self) -> Word:
        """The linear word this was built from, cyclically reduced."""
        return self._word

    @property
    def canonical(self) -> Word:
        """The least rotation, used for comparison."""
        return Word._trusted(self._word.alphabet, self._canonical)

    @property
    def alphabet(self) -> Alphabet:
        """The alphabet of the representative."""
        return self._word.alphabet

    def rotations(self) -> tuple[Word, ...]:
        """Every rotation of the representative, starting with itself."""
        symbols = self._word.symbols
        return tuple(Word._trusted(self.alphabet, symbols[i:] + symbols[:i]) for i in range(len(symbols))) or (
            self._word,
        )

    def inverse(self) -> CyclicWord:
        """The class of the inverse word."""
        return CyclicWord._from_reduced(~self._word)

    def over(self, alphabet: Alphabet) -> CyclicWord:
        """The same cyclic word over a larger or renamed-equal alphabet."""
        return CyclicWord._from_reduced(self._word.over(alphabet))

    def __len__(self) -> int:
        return len(self._word)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self._canonical == other._canonical and self.alphabet == other.alphabet

    def __hash__(self) -> int:
        return hash(self._canonical)

    def __str__(self) -> str:
        return str(self._word)

    def __repr__(self) -> str:
        return f"<CyclicWord '{self._word}'>"
