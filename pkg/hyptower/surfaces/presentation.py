# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Standard presentations of surface groups with their boundary words."""
from __future__ import annotations

from collections.abc import Iterable, Mapping

from hyptower.errors import UnsupportedSurfaceError
from hyptower.groups import Presentation
from hyptower.words import Alphabet, Word, commutator

from .datum import SurfaceDatum


__all__ = ("SurfacePresentation", "standard_presentation")


class SurfacePresentation:
    """A surface group presentation together with one word per boundary component.

    Parameters
    ----------
    presentation : Presentation
        The fundamental group presentation.
    boundary_words : Iterable[Word]
        Words representing the boundary components, in order.
    """

    __slots__ = ("_presentation", "_boundary_words")

    def __init__(self, presentation: Presentation, boundary_words: Iterable[Word]):
        self._presentation = presentation
        self._boundary_words = tuple(word.over(presentation.alphabet) for word in boundary_words)

    @property
    def presentation(self) -> Presentation:
        """The group presentation."""
        return self._presentation

    @property
    def boundary_words(self) -> tuple[Word, ...]:
        """One word per boundary component."""
        return self._boundary_words

    @property
    def alphabet(self) -> Alphabet:
        """The generators."""
        return self._presentation.alphabet

    def rename(self, mapping: Mapping[str, str]) -> SurfacePresentation:
        """Rename generators in the presentation and the boundary words."""
        presentation = self._presentation.rename(mapping)
        words = [
            Word(presentation.alphabet, [(mapping.get(name, name), sign) for name, sign in word])
            for word in self._boundary_words
        ]
        return SurfacePresentation(presentation, words)

    def rename_positionally(self, names: Iterable[str]) -> SurfacePresentation:
        """Rename the generators, in order, to ``names``."""
        names = tuple(names)
        if len(names) != len(self.alphabet):
            raise ValueError(f"Expected {len(self.alphabet)} generator names, got {len(names)}.")
        return self.rename(dict(zip(self.alphabet, names)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurfacePresentation):
            return NotImplemented
        return self._presentation == other._presentation and self._boundary_words == other._boundary_words

    def __hash__(self) -> int:
        return hash((self._presentation, self._boundary_words))

    def __repr__(self) -> str:
        words = ", ".join(map(str, self._boundary_words))
        return f"<SurfacePresentation presentation={self._presentation} boundary_words=({words})>"


def standard_presentation(surface: SurfaceDatum, prefix: str = "") -> SurfacePresentation:
    """The standard presentation of a surface.

    Closed surfaces get one relator: ``[a1, a2] ... [a(2g-1), a(2g)]`` or ``d1^2 ... dq^2``. A surface with ``r``
    boundary components is free on the handle or crosscap generators and ``g1 ... g(r-1)``; the boundary words are
    ``g1, ..., g(r-1)`` and ``(g1 ... g(r-1))^-1 W`` where ``W`` is the closed-surface relator word.

    Parameters
    ----------
    surface : SurfaceDatum
        The surface.
    prefix : str
        Prepended to every generator name.

    Raises
    ------
    UnsupportedSurfaceError
        For the sphere and the disk, which have no essential boundary.
    """
    if surface.orientable and surface.genus == 0 and surface.boundary_count <= 1:
        raise UnsupportedSurfaceError(surface, "its fundamental group is trivial")
    if surface.orientable:
        handles = surface.genus or 0
        surface_names = [f"{prefix}a{i}" for i in range(1, 2 * handles + 1)]
    else:
        surface_names = [f"{prefix}d{i}" for i in range(1, surface.crosscaps + 1)]
    boundary_names = [f"{prefix}g{i}" for i in range(1, surface.boundary_count)]
    alphabet = Alphabet(surface_names + boundary_names)

    def letter(name: str) -> Word:
        return Word.generator(alphabet, name)

    product = Word.identity(alphabet)
    if surface.orientable:
        for i in range(0, len(surface_names), 2):
            product = product * commutator(letter(surface_names[i]), letter(surface_names[i + 1]))
    else:
        for name in surface_names:
            product = product * letter(name) ** 2

    if surface.is_closed:
        return SurfacePresentation(Presentation(alphabet, [product]), [])
    boundary = [letter(name) for name in boundary_names]
    partial = Word.identity(alphabet)
    for word in boundary:
        partial = partial * word
    boundary.append(~partial * product)
    return SurfacePresentation(Presentation(alphabet), boundary)
