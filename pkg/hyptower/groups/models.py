# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Group models: presentations with a strategy for the word problem.

Supported shapes are free groups, infinite cyclic groups, one-relator groups satisfying C'(1/6), and free products
of these. Anything else is either refused or, where only relator membership is needed, wrapped in a certificate
model that can confirm relators but cannot refute triviality.
"""
from __future__ import annotations

import abc
import logging
from collections.abc import Iterable, Sequence
from typing import NamedTuple

import networkx as nx

from hyptower.errors import UnsupportedModelError
from hyptower.words import Alphabet, CyclicWord, Word, commutator

from .presentation import Presentation
from .small_cancellation import DehnRewriter, is_proper_power, max_piece_length, symmetrize


__all__ = (
    "GroupModel",
    "FreeModel",
    "InfiniteCyclicModel",
    "SmallCancellationModel",
    "FreeProductModel",
    "CertificateModel",
    "Syllable",
    "classify",
    "model_for",
    "is_trivial",
    "are_equal",
    "commute",
    "free_product_normal_form",
)

logger = logging.getLogger("hyptower.groups")


class GroupModel(abc.ABC):
    """A presented group together with a way to decide its word problem."""

    __slots__ = ()

    kind: str = "group"

    @property
    @abc.abstractmethod
    def alphabet(self) -> Alphabet:
        """The generators."""

    @property
    @abc.abstractmethod
    def presentation(self) -> Presentation:
        """A presentation of the group."""

    @abc.abstractmethod
    def _is_trivial(self, word: Word) -> bool:
        ...

    def normal_form(self, word: Word) -> Word:
        """A representative of the word's element; freely reduced by default."""
        return word.over(self.alphabet)

    def is_trivial(self, word: Word) -> bool:
        """Whether the word represents the identity.

        Raises
        ------
        AlphabetMismatchError
            If the word mentions generators outside the model.
        """
        return self._is_trivial(word.over(self.alphabet))

    def are_equal(self, first: Word, second: Word) -> bool:
        """Whether two words represent the same element."""
        return self.is_trivial(first.over(self.alphabet) * ~second.over(self.alphabet))

    def commute(self, first: Word, second: Word) -> bool:
        """Whether two words represent commuting elements."""
        return self.is_trivial(commutator(first.over(self.alphabet), second.over(self.alphabet)))

    def word(self, text: str) -> Word:
        """Parse a word over the model's generators."""
        return self.presentation.word(text)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} presentation={self.presentation}>"


class FreeModel(GroupModel):
    """The free group on an alphabet; a word is trivial iff it reduces to the empty word."""

    __slots__ = ("_alphabet",)

    kind = "free"

    def __init__(self, alphabet: Alphabet | Iterable[str]):
        self._alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def presentation(self) -> Presentation:
        return Presentation.free(self._alphabet)

    @property
    def rank(self) -> int:
        """Number of free generators."""
        return len(self._alphabet)

    def _is_trivial(self, word: Word) -> bool:
        return word.is_identity


class InfiniteCyclicModel(GroupModel):
    """The infinite cyclic group on one generator; a word is trivial iff its exponent sum is zero."""

    __slots__ = ("_generator", "_alphabet")

    kind = "infinite cyclic"

    def __init__(self, generator: str):
        self._generator = generator
        self._alphabet = Alphabet([generator])

    @property
    def generator(self) -> str:
        """The generator name."""
        return self._generator

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def presentation(self) -> Presentation:
        return Presentation.free(self._alphabet)

    def _is_trivial(self, word: Word) -> bool:
        return word.exponent_sum(self._generator) == 0

    def normal_form(self, word: Word) -> Word:
        return Word.generator(self._alphabet, self._generator) ** word.over(self._alphabet).exponent_sum(
            self._generator
        )


class SmallCancellationModel(GroupModel):
    """A one-relator group whose relator satisfies C'(1/6), solved with Dehn's algorithm.

    Parameters
    ----------
    presentation : Presentation
        A presentation with exactly one relator.
    step_limit : int
        Dehn step limit.

    Raises
    ------
    UnsupportedModelError
        If the presentation has another number of relators, the relator is a proper power, or some piece is at least
        a sixth of the relator.
    """

    __slots__ = ("_presentation", "_rewriter", "_max_piece")

    kind = "small cancellation"

    def __init__(self, presentation: Presentation, step_limit: int = 10000):
        symmetrized = symmetrize(presentation)
        relator = presentation.relators[0]
        if is_proper_power(relator):
            raise UnsupportedModelError(f"relator {relator} is a proper power, the group has torsion")
        self._max_piece = max_piece_length(symmetrized)
        if 6 * self._max_piece >= len(relator):
            raise UnsupportedModelError(
                f"relator {relator} has a piece of length {self._max_piece}, C'(1/6) needs less than "
                f"{len(relator) / 6:g}"
            )
        self._presentation = presentation
        self._rewriter = DehnRewriter(presentation, step_limit)

    @property
    def alphabet(self) -> Alphabet:
        return self._presentation.alphabet

    @property
    def presentation(self) -> Presentation:
        return self._presentation

    @property
    def max_piece(self) -> int:
        """Length of the longest piece."""
        return self._max_piece

    def _is_trivial(self, word: Word) -> bool:
        return self._rewriter.is_trivial(word)

    def normal_form(self, word: Word) -> Word:
        return self._rewriter.reduce(word.over(self.alphabet))


class Syllable(NamedTuple):
    """A maximal run of letters from one free factor, with the factor's index."""

    factor: int
    word: Word


class FreeProductModel(GroupModel):
    """A free product of models over pairwise disjoint alphabets.

    Nested free products are flattened. A word is trivial iff its reduced syllable sequence is empty.
    """

    __slots__ = ("_factors", "_alphabet", "_owner")

    kind = "free product"

    def __init__(self, factors: Iterable[GroupModel]):
        flat: list[GroupModel] = []
        for factor in factors:
            if isinstance(factor, FreeProductModel):
                flat.extend(factor.factors)
            else:
                flat.append(factor)
        owner: dict[str, int] = {}
        for index, factor in enumerate(flat):
            for name in factor.alphabet:
                if name in owner:
                    raise ValueError(f"Free factors share the generator {name!r}.")
                owner[name] = index
        self._factors = tuple(flat)
        self._owner = owner
        self._alphabet = Alphabet(owner)

    @property
    def factors(self) -> tuple[GroupModel, ...]:
        """The free factors in order."""
        return self._factors

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def presentation(self) -> Presentation:
        relators = [
            relator.over(self._alphabet) for factor in self._factors for relator in factor.presentation.relators
        ]
        return Presentation(self._alphabet, relators)

    def syllables(self, word: Word) -> list[Syllable]:
        """The reduced syllable sequence of a word."""
        word = word.over(self._alphabet)
        runs: list[tuple[int, list]] = []
        for symbol in word:
            index = self._owner[symbol.name]
            if runs and runs[-1][0] == index:
                runs[-1][1].append(symbol)
            else:
                runs.append((index, [symbol]))
        stack: list[Syllable] = []
        for index, symbols in runs:
            factor = self._factors[index]
            part = Word(factor.alphabet, symbols)
            if stack and stack[-1].factor == index:
                part = stack.pop().word * part
            if factor.is_trivial(part):
                continue
            stack.append(Syllable(index, factor.normal_form(part)))
        return stack

    def _is_trivial(self, word: Word) -> bool:
        return not self.syllables(word)

    def normal_form(self, word: Word) -> Word:
        symbols = [symbol for syllable in self.syllables(word) for symbol in syllable.word]
        return Word(self._alphabet, symbols)


class CertificateModel(GroupModel):
    """A presentation whose word problem is not solved, only certified for relators.

    A word is confirmed trivial when it is freely trivial or its cyclic reduction is a rotation of a relator or of
    a relator's inverse. Any other question raises `UnsupportedModelError`.
    """

    __slots__ = ("_presentation", "_classes")

    kind = "certificate only"

    def __init__(self, presentation: Presentation):
        self._presentation = presentation
        self._classes = frozenset(presentation.relators) | frozenset(r.inverse() for r in presentation.relators)

    @property
    def alphabet(self) -> Alphabet:
        return self._presentation.alphabet

    @property
    def presentation(self) -> Presentation:
        return self._presentation

    def _is_trivial(self, word: Word) -> bool:
        if word.is_identity or CyclicWord(word) in self._classes:
            return True
        raise UnsupportedModelError(f"cannot decide whether {word} is trivial in {self._presentation}")


def _relator_components(presentation: Presentation) -> list[list[CyclicWord]]:
    """Group relators whose generator sets overlap, transitively."""
    graph = nx.Graph()
    for index, relator in enumerate(presentation.relators):
        graph.add_node(("relator", index))
        for name in relator.representative.letters:
            graph.add_edge(("relator", index), ("generator", name))
    components = []
    for component in nx.connected_components(graph):
        indices = sorted(index for kind, index in component if kind == "relator")
        if indices:
            components.append([presentation.relators[index] for index in indices])
    return sorted(components, key=lambda relators: presentation.relators.index(relators[0]))


def classify(presentation: Presentation, step_limit: int = 10000) -> GroupModel:
    """Pick a word-problem strategy for a presentation.

    Generators that occur in no relator split off as free factors. Every group of relators sharing generators must
    consist of a single C'(1/6) relator.

    Raises
    ------
    UnsupportedModelError
        If no supported strategy applies.
    """
    used: set[str] = set()
    factors: list[GroupModel] = []
    for relators in _relator_components(presentation):
        if len(relators) > 1:
            raise UnsupportedModelError(
                f"{len(relators)} relators share generators in {presentation}, only one-relator pieces are supported"
            )
        letters = relators[0].representative.letters
        used |= letters
        alphabet = Alphabet(name for name in presentation.alphabet if name in letters)
        factors.append(SmallCancellationModel(Presentation(alphabet, relators), step_limit))
    free = [name for name in presentation.alphabet if name not in used]
    if len(free) == 1:
        factors.append(InfiniteCyclicModel(free[0]))
    elif free or not factors:
        factors.append(FreeModel(free))
    model = factors[0] if len(factors) == 1 else FreeProductModel(factors)
    logger.debug("Classified %s as %s", presentation, model.kind)
    return model


def model_for(presentation: Presentation, step_limit: int = 10000) -> GroupModel:
    """`classify`, falling back to a `CertificateModel` when the presentation is unsupported."""
    try:
        return classify(presentation, step_limit)
    except UnsupportedModelError as exc:
        logger.info("Using a certificate-only model: %s", exc.reason)
        return CertificateModel(presentation)


def is_trivial(word: Word, model: GroupModel) -> bool:
    """Whether ``word`` is trivial in ``model``."""
    return model.is_trivial(word)


def are_equal(first: Word, second: Word, model: GroupModel) -> bool:
    """Whether two words are equal in ``model``."""
    return model.are_equal(first, second)


def commute(first: Word, second: Word, model: GroupModel) -> bool:
    """Whether two words commute in ``model``."""
    return model.commute(first, second)


def free_product_normal_form(word: Word, model: GroupModel) -> Sequence[Syllable]:
    """Syllable normal form of a word in a free product; a single factor model yields one syllable."""
    if isinstance(model, FreeProductModel):
        return model.syllables(word)
    if model.is_trivial(word):
        return []
    return [Syllable(0, model.normal_form(word))]
