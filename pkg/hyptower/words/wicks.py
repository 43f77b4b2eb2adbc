# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Recognising conjugates of commutators.

A reduced word is conjugate to a commutator ``[x, y]`` exactly when some rotation of its cyclic reduction has the
shape ``A B C A^-1 B^-1 C^-1`` with ``A``, ``B`` and ``C`` possibly empty and no cancellation between the pieces.
Since ``A B C A^-1 B^-1 C^-1 = [A B, C A^-1]`` a match also yields the commutator itself.
"""
from __future__ import annotations

from typing import NamedTuple

from .cyclic import cyclic_reduce
from .word import Word, _inverse_symbols


__all__ = ("WicksWitness", "is_genus_one_commutator")


class WicksWitness(NamedTuple):
    """Pieces ``A``, ``B``, ``C`` of a matching rotation, and the rotation offset into the cyclic reduction."""

    a: Word
    b: Word
    c: Word
    offset: int

    def as_commutator(self) -> tuple[Word, Word]:
        """``(x, y)`` with ``[x, y]`` equal to the matched rotation."""
        return self.a * self.b, self.c * ~self.a

    def __str__(self) -> str:
        return f"A = {self.a}, B = {self.b}, C = {self.c}"


def is_genus_one_commutator(word: Word) -> WicksWitness | None:
    """Decide whether ``word`` is conjugate to a single commutator in the free group on its alphabet.

    Rotations are tried in order and, within a rotation, longer ``A`` and then longer ``B`` come first, so the
    witness found is deterministic.

    Parameters
    ----------
    word : Word
        Any reduced word.

    Returns
    -------
    WicksWitness | None
        The first witness found, or None when the word is not conjugate to a commutator.
    """
    core, _ = cyclic_reduce(word)
    symbols = core.representative.symbols
    length = len(symbols)
    if length % 2:
        return None
    half = length // 2
    alphabet = word.alphabet
    for offset in range(max(length, 1)):
        rotation = symbols[offset:] + symbols[:offset]
        first, second = rotation[:half], rotation[half:]
        for i in range(half, -1, -1):
            if second[:i] != _inverse_symbols(first[:i]):
                continue
            for j in range(half - i, -1, -1):
                a, b, c = first[:i], first[i : i + j], first[i + j :]
                if second[i : i + j] == _inverse_symbols(b) and second[i + j :] == _inverse_symbols(c):
                    return WicksWitness(
                        Word._trusted(alphabet, a), Word._trusted(alphabet, b), Word._trusted(alphabet, c), offset
                    )
    return None

