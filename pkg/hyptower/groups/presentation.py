# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Finite group presentations and Tietze moves."""
from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Mapping

from hyptower.errors import AlphabetMismatchError
from hyptower.words import Alphabet, CyclicWord, Word, parse_word


__all__ = ("Presentation",)

logger = logging.getLogger("hyptower.groups")


def _relator_key(relator: CyclicWord) -> tuple:
    """Key identifying a relator up to rotation and inversion."""
    forward = tuple(relator.canonical.symbols)
    backward = tuple(relator.inverse().canonical.symbols)
    return min(forward, backward)


class Presentation:
    """A finite presentation ``<generators | relators>``.

    Relators are stored cyclically reduced and must be non-trivial. Two presentations are equal when they have the
    same generator set and the same multiset of relators up to rotation and inversion.

    Parameters
    ----------
    generators : Alphabet | Iterable[str]
        The generators.
    relators : Iterable[Word | CyclicWord]
        Relator words over the generators.
    """

    __slots__ = ("_alphabet", "_relators")

    def __init__(self, generators: Alphabet | Iterable[str], relators: Iterable[Word | CyclicWord] = ()):
        self._alphabet = generators if isinstance(generators, Alphabet) else Alphabet(generators)
        cyclic: list[CyclicWord] = []
        for relator in relators:
            word = relator.representative if isinstance(relator, CyclicWord) else relator
            core = CyclicWord(word.over(self._alphabet))
            if not len(core):
                raise ValueError(f"Relator {word} is trivial in the free group.")
            cyclic.append(core)
        self._relators = tuple(cyclic)

    @classmethod
    def parse(cls, generators: Iterable[str], relators: Iterable[str]) -> Presentation:
        """Build a presentation from relator strings, where ``lhs = rhs`` stands for ``lhs rhs^-1``."""
        alphabet = Alphabet(generators)
        words = []
        for text in relators:
            if "=" in text:
                lhs, _, rhs = text.partition("=")
                words.append(parse_word(lhs, alphabet) * ~parse_word(rhs, alphabet))
            else:
                words.append(parse_word(text, alphabet))
        return cls(alphabet, words)

    @classmethod
    def free(cls, generators: Alphabet | Iterable[str]) -> Presentation:
        """A presentation with no relators."""
        return cls(generators)

    @property
    def alphabet(self) -> Alphabet:
        """The generators as an alphabet."""
        return self._alphabet

    @property
    def generators(self) -> tuple[str, ...]:
        """The generator names in order."""
        return self._alphabet.names

    @property
    def relators(self) -> tuple[CyclicWord, ...]:
        """The relators, cyclically reduced."""
        return self._relators

    def word(self, text: str) -> Word:
        """Parse a word over these generators."""
        return parse_word(text, self._alphabet)

    def with_generator(self, name: str) -> Presentation:
        """The presentation with one more free generator."""
        alphabet = self._alphabet.with_generator(name)
        return Presentation(alphabet, (relator.over(alphabet) for relator in self._relators))

    def rename(self, mapping: Mapping[str, str]) -> Presentation:
        """Rename generators. Names missing from the mapping are kept."""
        self._alphabet.check(mapping)
        alphabet = Alphabet(mapping.get(name, name) for name in self._alphabet)
        relators = [
            Word(alphabet, [(mapping.get(name, name), sign) for name, sign in relator.representative])
            for relator in self._relators
        ]
        return Presentation(alphabet, relators)

    def eliminate(self, generator: str, replacement: Word) -> Presentation:
        """Remove ``generator`` by substituting ``replacement`` for it.

        The replacement must not mention the generator. Relators that become trivial are dropped.
        """
        if generator not in self._alphabet:
            raise AlphabetMismatchError([generator], self._alphabet.names)
        if generator in replacement.letters:
            raise ValueError(f"Cannot eliminate {generator} using a word that contains it.")
        alphabet = Alphabet(name for name in self._alphabet if name != generator)
        images = {name: Word.generator(alphabet, name) for name in alphabet}
        images[generator] = replacement.over(alphabet)
        relators = [relator.representative.substitute(images, alphabet) for relator in self._relators]
        return Presentation(alphabet, [relator for relator in relators if not relator.is_identity])

    def simplify(self) -> Presentation:
        """Repeatedly eliminate a generator that occurs exactly once in some relator.

        The last such generator in alphabet order is eliminated first, so earlier generators survive.
        """
        current = self
        while True:
            move = current._elimination_move()
            if move is None:
                return current
            generator, replacement = move
            logger.debug("Eliminating %s = %s", generator, replacement)
            current = current.eliminate(generator, replacement)

    def _elimination_move(self) -> tuple[str, Word] | None:
        for name in reversed(self._alphabet.names):
            for relator in self._relators:
                counts = Counter(symbol.name for symbol in relator.representative)
                if counts[name] != 1:
                    continue
                symbols = relator.representative.symbols
                position = next(i for i, symbol in enumerate(symbols) if symbol.name == name)
                rotated = symbols[position:] + symbols[:position]
                rest = Word(self._alphabet, rotated[1:])
                return name, (~rest if rotated[0].sign > 0 else rest)
        return None

    def exponent_matrix(self) -> list[list[int]]:
        """Exponent sums of each generator in each relator, one row per relator."""
        return [list(relator.representative.exponent_vector(self._alphabet)) for relator in self._relators]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Presentation):
            return NotImplemented
        return self._alphabet == other._alphabet and Counter(map(_relator_key, self._relators)) == Counter(
            map(_relator_key, other._relators)
        )

    def __hash__(self) -> int:
        return hash((self._alphabet, frozenset(Counter(map(_relator_key, self._relators)).items())))

    def __str__(self) -> str:
        if not self._relators:
            return f"< {', '.join(self._alphabet)} >"
        return f"< {', '.join(self._alphabet)} | {', '.join(map(str, self._relators))} >"

    def __repr__(self) -> str:
        return f"<Presentation generators={self.generators!r} relators={tuple(map(str, self._relators))!r}>"
