# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Floor and tower candidates."""
from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING, NamedTuple

from hyptower.gog import GraphOfGroupsWithSurfaces
from hyptower.groups import Presentation
from hyptower.homs import GroupMap
from hyptower.surfaces import SurfaceDatum
from hyptower.words import Word


if TYPE_CHECKING:
    from .report import VerificationReport

__all__ = ("Extension", "FloorCandidate", "BaseWitness", "GroundFloor", "TowerCandidate")


class Extension(NamedTuple):
    """Data for the extended branch: the adjoined letter and the retraction between the extended groups."""

    letter: str
    retraction: GroupMap


class FloorCandidate:
    """A decomposition of ``G`` with a retraction onto the free product ``G'`` of its plain vertex groups.

    Parameters
    ----------
    decomposition : GraphOfGroupsWithSurfaces
        The graph of groups; ``G`` is its induced presentation.
    retraction : GroupMap
        ``r: G -> G'``.
    inclusion : GroupMap | None
        ``G' -> G``; defaults to sending each plain vertex generator to itself.
    extension : Extension | None
        ``r': G * <x> -> G' * <x>`` for the extended branch.
    name : str
        Used in reports.
    """

    __slots__ = ("_decomposition", "_retraction", "_inclusion", "_extension", "_name")

    def __init__(
        self,
        decomposition: GraphOfGroupsWithSurfaces,
        retraction: GroupMap,
        inclusion: GroupMap | None = None,
        extension: Extension | None = None,
        name: str = "floor",
    ):
        self._decomposition = decomposition
        self._retraction = retraction
        self._inclusion = inclusion
        self._extension = extension
        self._name = name

    @property
    def decomposition(self) -> GraphOfGroupsWithSurfaces:
        """The graph of groups."""
        return self._decomposition

    @property
    def retraction(self) -> GroupMap:
        """``r: G -> G'``."""
        return self._retraction

    @property
    def inclusion(self) -> GroupMap | None:
        """The given inclusion, if any."""
        return self._inclusion

    @property
    def extension(self) -> Extension | None:
        """Extended branch data."""
        return self._extension

    @property
    def name(self) -> str:
        """The candidate's name."""
        return self._name

    @property
    def source(self) -> Presentation:
        """The presentation of ``G``, taken from the retraction."""
        return self._retraction.source

    @property
    def target(self) -> Presentation:
        """The presentation of ``G'``, taken from the retraction."""
        return self._retraction.target.presentation

    def verify(self, *, samples: int = 0, seed: int | None = None) -> VerificationReport:
        """Verify this floor, see `verify_floor`."""
        from .verify import verify_floor

        return verify_floor(self, samples=samples, seed=seed)

    def __repr__(self) -> str:
        return f"<FloorCandidate name={self._name!r} extended={self._extension is not None}>"


class BaseWitness(NamedTuple):
    """Words in a plain vertex group of one floor equal to the generators of ``H``."""

    vertex: str
    words: tuple[Word, ...]


class GroundFloor(NamedTuple):
    """The last group of a tower as ``H * F * S1 * ... * Sp``; ``subgroup`` None means ``H`` is trivial."""

    subgroup: Presentation | None
    free_rank: int
    surfaces: tuple[SurfaceDatum, ...]


class TowerCandidate:
    """A chain of floors from ``G`` down to a ground floor containing ``H``.

    Parameters
    ----------
    group : Presentation
        ``G = G^0``.
    floors : Iterable[FloorCandidate]
        The floors in order; each target must be the next source.
    witnesses : Iterable[BaseWitness]
        One per floor, placing ``H`` inside a plain vertex group.
    ground : GroundFloor
        The shape of the last group.
    name : str
        Used in reports.
    """

    __slots__ = ("_group", "_floors", "_witnesses", "_ground", "_name")

    def __init__(
        self,
        group: Presentation,
        floors: Iterable[FloorCandidate],
        witnesses: Iterable[BaseWitness],
        ground: GroundFloor,
        name: str = "tower",
    ):
        self._group = group
        self._floors = tuple(floors)
        self._witnesses = tuple(witnesses)
        self._ground = ground
        self._name = name

    @property
    def group(self) -> Presentation:
        """``G``."""
        return self._group

    @property
    def floors(self) -> tuple[FloorCandidate, ...]:
        """The floors in order."""
        return self._floors

    @property
    def witnesses(self) -> tuple[BaseWitness, ...]:
        """Base subgroup witnesses, one per floor."""
        return self._witnesses

    @property
    def ground(self) -> GroundFloor:
        """The ground floor."""
        return self._ground

    @property
    def name(self) -> str:
        """The candidate's name."""
        return self._name

    @property
    def last_group(self) -> Presentation:
        """``G^m``."""
        return self._floors[-1].target if self._floors else self._group

    def verify(self, *, samples: int = 0, seed: int | None = None) -> VerificationReport:
        """Verify this tower, see `verify_tower`."""
        from .verify import verify_tower

        return verify_tower(self, samples=samples, seed=seed)

    def __repr__(self) -> str:
        return f"<TowerCandidate name={self._name!r} floors={len(self._floors)}>"
