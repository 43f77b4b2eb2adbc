# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Maps between presented groups given by generator images."""
from __future__ import annotations

import functools
import itertools
import logging
import random
from collections.abc import Mapping, Sequence
from types import MappingProxyType

from hyptower.errors import AlphabetMismatchError, GeneratorCollisionError
from hyptower.groups import (
    CertificateModel,
    FreeModel,
    FreeProductModel,
    GroupModel,
    InfiniteCyclicModel,
    Presentation,
    SmallCancellationModel,
)
from hyptower.words import Word, parse_word, random_word


__all__ = (
    "GroupMap",
    "apply",
    "homomorphism_failures",
    "verify_homomorphism",
    "identity_failures",
    "verify_retraction",
    "nonabelian_image",
    "adjoin_free_letter",
    "sample_retraction",
)

logger = logging.getLogger("hyptower.homs")


class GroupMap:
    """A map from a presented group to a group model, given by the image of each source generator.

    Parameters
    ----------
    source : Presentation
        The source presentation.
    target : GroupModel
        The target group.
    images : Mapping[str, Word | str]
        One image per source generator, as a word or in word syntax over the target generators.

    Raises
    ------
    ValueError
        If a source generator has no image.
    AlphabetMismatchError
        If an image names a generator outside the target, or a key is not a source generator.
    """

    __slots__ = ("_source", "_target", "_images")

    def __init__(self, source: Presentation, target: GroupModel, images: Mapping[str, Word | str]):
        source.alphabet.check(images)
        missing = [name for name in source.generators if name not in images]
        if missing:
            raise ValueError(f"No image given for generator(s) {', '.join(missing)}.")
        self._source = source
        self._target = target
        self._images = {
            name: parse_word(image, target.alphabet) if isinstance(image, str) else image.over(target.alphabet)
            for name, image in ((name, images[name]) for name in source.generators)
        }

    @classmethod
    def identity_inclusion(cls, source: Presentation, target: GroupModel) -> GroupMap:
        """The map sending each source generator to the target generator of the same name."""
        return cls(source, target, {name: Word.generator(target.alphabet, name) for name in source.generators})

    @property
    def source(self) -> Presentation:
        """The source presentation."""
        return self._source

    @property
    def target(self) -> GroupModel:
        """The target model."""
        return self._target

    @property
    def images(self) -> Mapping[str, Word]:
        """Generator images, read only."""
        return MappingProxyType(self._images)

    def image(self, name: str) -> Word:
        """The image of one generator."""
        return self._images[name]

    def __call__(self, word: Word) -> Word:
        return apply(self, word)

    def extended(self, name: str) -> GroupMap:
        """The map between both sides with a free letter adjoined, sending the new letter to itself."""
        source = adjoin_free_letter(self._source, name)
        target = adjoin_free_letter(self._target, name)
        images: dict[str, Word | str] = {key: value.over(target.alphabet) for key, value in self._images.items()}
        images[name] = Word.generator(target.alphabet, name)
        return GroupMap(source, target, images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupMap):
            return NotImplemented
        return (
            self._source == other._source
            and self._target.presentation == other._target.presentation
            and self._images == other._images
        )

    def __hash__(self) -> int:
        return hash((self._source, frozenset(self._images.items())))

    def __repr__(self) -> str:
        images = ", ".join(f"{name} -> {word}" for name, word in self._images.items())
        return f"<GroupMap {{{images}}} target={self._target.presentation}>"


def apply(m: GroupMap, word: Word) -> Word:
    """Substitute generator images and freely reduce over the target alphabet.

    Raises
    ------
    AlphabetMismatchError
        If the word is not over the source generators.
    """
    return word.over(m.source.alphabet).substitute(m.images, m.target.alphabet)


def homomorphism_failures(m: GroupMap) -> tuple[tuple[Word, Word], ...]:
    """Source relators whose image is non-trivial in the target, with the image."""
    failures = []
    for relator in m.source.relators:
        image = apply(m, relator.representative)
        if not m.target.is_trivial(image):
            failures.append((relator.representative, image))
    return tuple(failures)


def verify_homomorphism(m: GroupMap) -> bool:
    """Whether every source relator maps to the identity."""
    return not homomorphism_failures(m)


def _check_composable(r: GroupMap, inclusion: GroupMap) -> None:
    if inclusion.source.alphabet != r.target.alphabet:
        raise AlphabetMismatchError(set(inclusion.source.alphabet) ^ set(r.target.alphabet), r.target.alphabet.names)
    if inclusion.target.alphabet != r.source.alphabet:
        raise AlphabetMismatchError(set(inclusion.target.alphabet) ^ set(r.source.alphabet), r.source.alphabet.names)


def identity_failures(r: GroupMap, inclusion: GroupMap) -> tuple[tuple[str, Word], ...]:
    """Generators ``g`` of the subgroup with ``r(inclusion(g)) != g``, with the computed value."""
    _check_composable(r, inclusion)
    failures = []
    for name in inclusion.source.generators:
        value = apply(r, inclusion.image(name))
        if not r.target.are_equal(value, Word.generator(r.target.alphabet, name)):
            failures.append((name, value))
    return tuple(failures)


def verify_retraction(r: GroupMap, inclusion: GroupMap) -> bool:
    """Whether both maps are homomorphisms and ``r`` restricts to the identity on the included subgroup.

    Raises
    ------
    AlphabetMismatchError
        If the maps do not compose.
    """
    _check_composable(r, inclusion)
    return verify_homomorphism(inclusion) and verify_homomorphism(r) and not identity_failures(r, inclusion)


def nonabelian_image(m: GroupMap, subgroup_generators: Sequence[Word]) -> bool:
    """Whether the image of the generated subgroup is non-abelian, decided on generator pairs."""
    images = [apply(m, word) for word in subgroup_generators]
    return any(not m.target.commute(x, y) for x, y in itertools.combinations(images, 2))


@functools.singledispatch
def adjoin_free_letter(group, name: str):
    """Free product with one infinite cyclic factor generated by ``name``.

    Raises
    ------
    GeneratorCollisionError
        If the name is already a generator.
    """
    raise TypeError(f"Cannot adjoin a free letter to {type(group).__name__}.")


@adjoin_free_letter.register
def _(group: Presentation, name: str) -> Presentation:
    return group.with_generator(name)


@adjoin_free_letter.register
def _(group: FreeModel, name: str) -> FreeModel:
    return FreeModel(group.alphabet.with_generator(name))


@adjoin_free_letter.register(InfiniteCyclicModel)
@adjoin_free_letter.register(SmallCancellationModel)
@adjoin_free_letter.register(FreeProductModel)
@adjoin_free_letter.register(CertificateModel)
def _(group: GroupModel, name: str) -> FreeProductModel:
    if name in group.alphabet:
        raise GeneratorCollisionError(name)
    return FreeProductModel([group, InfiniteCyclicModel(name)])


def sample_retraction(
    r: GroupMap, inclusion: GroupMap, samples: int, max_length: int, rng: random.Random
) -> list[Word]:
    """Random subgroup words ``w`` with ``r(inclusion(w)) != w``; empty when every sample passes."""
    _check_composable(r, inclusion)
    bad = []
    for _ in range(samples):
        word = random_word(inclusion.source.alphabet, max_length, rng)
        if not r.target.are_equal(apply(r, apply(inclusion, word)), word.over(r.target.alphabet)):
            bad.append(word)
    logger.debug("Sampled %d word(s), %d failed r . i = id", samples, len(bad))
    return bad

