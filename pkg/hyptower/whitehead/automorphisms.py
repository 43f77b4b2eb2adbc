# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Whitehead automorphisms of a free group."""
from __future__ import annotations

import itertools
from collections.abc import Mapping

from hyptower.words import Alphabet, GeneratorSymbol, Word, cyclic_reduce


__all__ = ("WhiteheadAutomorphism", "whitehead_generators", "rank_alphabet")

# x -> x, x a, a^-1 x, a^-1 x a
_CHOICES = 4


def rank_alphabet(rank: int | Alphabet) -> Alphabet:
    """An alphabet for a rank, or the alphabet itself."""
    return rank if isinstance(rank, Alphabet) else Alphabet.free_basis(rank)


class WhiteheadAutomorphism:
    """An automorphism of a free group given by the images of its basis.

    Type 1 automorphisms permute the basis and invert some of its letters. Type 2 automorphisms fix a multiplier
    letter ``a`` and send each other generator ``x`` to one of ``x``, ``x a``, ``a^-1 x`` or ``a^-1 x a``.
    """

    __slots__ = ("_alphabet", "_images", "_kind", "_multiplier", "_choices")

    def __init__(
        self,
        alphabet: Alphabet,
        images: Mapping[str, Word],
        kind: int,
        multiplier: GeneratorSymbol | None = None,
        choices: tuple[int, ...] = (),
    ):
        self._alphabet = alphabet
        self._images = {name: images[name].over(alphabet) for name in alphabet}
        self._kind = kind
        self._multiplier = multiplier
        self._choices = choices

    @classmethod
    def signed_permutation(
        cls, alphabet: Alphabet, targets: tuple[str, ...], signs: tuple[int, ...]
    ) -> WhiteheadAutomorphism:
        """The type 1 automorphism sending the i-th generator to ``targets[i]^signs[i]``."""
        images = {
            name: Word.generator(alphabet, target, sign) for name, target, sign in zip(alphabet, targets, signs)
        }
        return cls(alphabet, images, 1)

    @classmethod
    def multiplier_move(
        cls, alphabet: Alphabet, multiplier: GeneratorSymbol, choices: tuple[int, ...]
    ) -> WhiteheadAutomorphism:
        """The type 2 automorphism with the given multiplier; ``choices`` covers the other generators in order."""
        a = Word(alphabet, [multiplier])
        images = {multiplier.name: Word.generator(alphabet, multiplier.name)}
        others = [name for name in alphabet if name != multiplier.name]
        for name, choice in zip(others, choices):
            x = Word.generator(alphabet, name)
            images[name] = (x, x * a, ~a * x, ~a * x * a)[choice]
        return cls(alphabet, images, 2, multiplier, choices)

    @property
    def alphabet(self) -> Alphabet:
        """The basis."""
        return self._alphabet

    @property
    def kind(self) -> int:
        """1 for signed permutations, 2 for multiplier moves."""
        return self._kind

    @property
    def multiplier(self) -> GeneratorSymbol | None:
        """The multiplier of a type 2 automorphism."""
        return self._multiplier

    @property
    def images(self) -> dict[str, Word]:
        """Images of the basis."""
        return dict(self._images)

    @property
    def is_identity(self) -> bool:
        """Whether every generator is fixed."""
        return all(image == Word.generator(self._alphabet, name) for name, image in self._images.items())

    def __call__(self, word: Word) -> Word:
        return word.over(self._alphabet).substitute(self._images, self._alphabet)

    def apply_cyclic(self, word: Word) -> Word:
        """The cyclic reduction of the image."""
        return cyclic_reduce(self(word))[0].representative

    def then(self, other: WhiteheadAutomorphism) -> dict[str, Word]:
        """Images of the composite that applies this automorphism first."""
        return {name: other(image) for name, image in self._images.items()}

    def inverse(self) -> WhiteheadAutomorphism:
        """The inverse, which is again a Whitehead automorphism of the same type."""
        if self._kind == 2 and self._multiplier is not None:
            return WhiteheadAutomorphism.multiplier_move(self._alphabet, self._multiplier.inverse(), self._choices)
        images = {}
        for name, image in self._images.items():
            (symbol,) = image.symbols
            images[symbol.name] = Word.generator(self._alphabet, name, symbol.sign)
        return WhiteheadAutomorphism(self._alphabet, images, 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WhiteheadAutomorphism):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(tuple(sorted((name, image) for name, image in self._images.items())))

    def __str__(self) -> str:
        return ", ".join(f"{name} -> {image}" for name, image in self._images.items())

    def __repr__(self) -> str:
        return f"<WhiteheadAutomorphism type={self._kind} images={{{self}}}>"


def whitehead_generators(rank: int | Alphabet) -> tuple[WhiteheadAutomorphism, ...]:
    """Every Whitehead automorphism of the given rank, in table order.

    Signed permutations come first, starting with the identity. Multiplier moves follow, ordered by multiplier
    ``a, a^-1, b, b^-1, ...`` and then by the choice table; the choice fixing every generator is left out.
    """
    alphabet = rank_alphabet(rank)
    n = len(alphabet)
    table: list[WhiteheadAutomorphism] = []
    for targets in itertools.permutations(alphabet.names):
        for signs in itertools.product((1, -1), repeat=n):
            table.append(WhiteheadAutomorphism.signed_permutation(alphabet, targets, signs))
    for multiplier in alphabet.symbols():
        for choices in itertools.product(range(_CHOICES), repeat=n - 1):
            if any(choices):
                table.append(WhiteheadAutomorphism.multiplier_move(alphabet, multiplier, choices))
    return tuple(table)
