# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Enumeration of the ways a closed surface can split into floor pieces.

A floor profile of a closed surface ``S`` lists the surface pieces (bounded, floor admissible) and the complementary
pieces obtained by cutting ``S`` along disjoint two-sided curves. Euler characteristics add up to that of ``S`` and
both sides carry the same number of boundary curves. The gluing graph, with a vertex per piece and an edge per
curve, is bipartite and connected, so there are at least as many curves as pieces minus one.
"""
from __future__ import annotations

import enum
import itertools
import logging
from collections.abc import Iterator
from typing import NamedTuple

from hyptower.errors import UnsupportedSurfaceError
from hyptower.words import is_genus_one_commutator

from .datum import SurfaceDatum, is_floor_admissible
from .presentation import standard_presentation


__all__ = (
    "RejectionReason",
    "Rejection",
    "FloorProfile",
    "bounded_surfaces",
    "enumerate_floor_profiles",
    "enumerate_subsurfaces",
)

logger = logging.getLogger("hyptower.surfaces")

PUNCTURED_TORUS = SurfaceDatum(True, -1, 1)


class RejectionReason(enum.Enum):
    """Why a numerically possible profile cannot carry a floor."""

    ORIENTABILITY = "gluing orientable pieces along a tree yields an orientable surface"
    COMMUTATOR_OBSTRUCTION = "the complement's boundary word is not a commutator"


class Rejection(NamedTuple):
    """A rejection reason with a human readable explanation."""

    reason: RejectionReason
    detail: str


class FloorProfile:
    """Surface pieces and complementary pieces of one decomposition of a closed surface."""

    __slots__ = ("_surface_pieces", "_complement_pieces", "_rejection")

    def __init__(
        self,
        surface_pieces: tuple[SurfaceDatum, ...],
        complement_pieces: tuple[SurfaceDatum, ...],
        rejection: Rejection | None = None,
    ):
        self._surface_pieces = tuple(sorted(surface_pieces))
        self._complement_pieces = tuple(sorted(complement_pieces))
        self._rejection = rejection

    @property
    def surface_pieces(self) -> tuple[SurfaceDatum, ...]:
        """The floor-admissible pieces, sorted."""
        return self._surface_pieces

    @property
    def complement_pieces(self) -> tuple[SurfaceDatum, ...]:
        """The complementary pieces, sorted."""
        return self._complement_pieces

    @property
    def rejection(self) -> Rejection | None:
        """Why the profile cannot carry a floor, if known."""
        return self._rejection

    @property
    def accepted(self) -> bool:
        """Whether no rejection applies."""
        return self._rejection is None

    @property
    def curve_count(self) -> int:
        """Number of cutting curves."""
        return sum(piece.boundary_count for piece in self._surface_pieces)

    @property
    def sort_key(self) -> tuple:
        """Order by surface pieces, then complement pieces."""
        return (
            tuple(piece.sort_key for piece in self._surface_pieces),
            tuple(piece.sort_key for piece in self._complement_pieces),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FloorProfile):
            return NotImplemented
        return (self._surface_pieces, self._complement_pieces, self._rejection) == (
            other._surface_pieces,
            other._complement_pieces,
            other._rejection,
        )

    def __hash__(self) -> int:
        return hash((self._surface_pieces, self._complement_pieces, self._rejection))

    def __str__(self) -> str:
        surfaces = " + ".join(piece.name for piece in self._surface_pieces)
        complements = " + ".join(piece.name for piece in self._complement_pieces)
        status = "accepted" if self._rejection is None else f"rejected: {self._rejection.detail}"
        return f"{{{surfaces} | {complements}}} {status}"

    def __repr__(self) -> str:
        return (
            f"<FloorProfile surface_pieces={self._surface_pieces!r} complement_pieces={self._complement_pieces!r} "
            f"rejection={self._rejection!r}>"
        )


def bounded_surfaces(lowest: int, highest: int, orientable_only: bool = False) -> Iterator[SurfaceDatum]:
    """Every bounded surface with Euler characteristic in ``[lowest, highest]``."""
    for euler_char in range(lowest, highest + 1):
        for boundary in range(1, 3 - euler_char):
            total = euler_char + boundary
            if total <= 2 and total % 2 == 0:
                yield SurfaceDatum(True, euler_char, boundary)
            if not orientable_only and total <= 1:
                yield SurfaceDatum(False, euler_char, boundary)


def _multisets(candidates: list[SurfaceDatum], max_size: int) -> Iterator[tuple[SurfaceDatum, ...]]:
    for size in range(1, max_size + 1):
        yield from itertools.combinations_with_replacement(candidates, size)


def _classify_profile(
    ambient: SurfaceDatum, surfaces: tuple[SurfaceDatum, ...], complements: tuple[SurfaceDatum, ...]
) -> Rejection | None:
    pieces = surfaces + complements
    curves = sum(piece.boundary_count for piece in surfaces)
    if not ambient.orientable and all(piece.orientable for piece in pieces) and curves == len(pieces) - 1:
        return Rejection(
            RejectionReason.ORIENTABILITY,
            f"all pieces are orientable and glued along a tree, so the result cannot be the {ambient.name}",
        )
    if surfaces == (PUNCTURED_TORUS,) and len(complements) == 1 and complements[0].boundary_count == 1:
        boundary = standard_presentation(complements[0]).boundary_words[0]
        if is_genus_one_commutator(boundary) is None:
            return Rejection(
                RejectionReason.COMMUTATOR_OBSTRUCTION,
                f"the boundary word {boundary} of the {complements[0].name} is not conjugate to a commutator, so "
                f"no retraction onto it restricts to the punctured torus",
            )
    return None


def enumerate_floor_profiles(ambient: SurfaceDatum, piece_bound: int = 4) -> list[FloorProfile]:
    """All floor profiles of a closed surface.

    Parameters
    ----------
    ambient : SurfaceDatum
        A closed surface.
    piece_bound : int
        Maximum number of pieces on each side.

    Returns
    -------
    list[FloorProfile]
        Profiles sorted by their pieces; rejected ones carry the reason.

    Raises
    ------
    UnsupportedSurfaceError
        If the surface has boundary.
    """
    if not ambient.is_closed:
        raise UnsupportedSurfaceError(ambient, "floor profiles are enumerated for closed surfaces")
    chi = ambient.euler_char
    orientable_only = ambient.orientable
    admissible = [s for s in bounded_surfaces(chi, -1, orientable_only) if is_floor_admissible(s)]
    profiles: list[FloorProfile] = []
    for surfaces in _multisets(admissible, piece_bound):
        surface_chi = sum(piece.euler_char for piece in surfaces)
        if surface_chi < chi:
            continue
        curves = sum(piece.boundary_count for piece in surfaces)
        remainder = chi - surface_chi
        candidates = [s for s in bounded_surfaces(remainder, 0, orientable_only) if s.boundary_count <= curves]
        for complements in _multisets(candidates, piece_bound):
            if sum(piece.euler_char for piece in complements) != remainder:
                continue
            if sum(piece.boundary_count for piece in complements) != curves:
                continue
            if curves < len(surfaces) + len(complements) - 1:
                continue
            profiles.append(FloorProfile(surfaces, complements, _classify_profile(ambient, surfaces, complements)))
    profiles.sort(key=lambda profile: profile.sort_key)
    logger.info(
        "Found %d floor profile(s) of the %s, %d accepted",
        len(profiles),
        ambient.name,
        sum(profile.accepted for profile in profiles),
    )
    return profiles


def enumerate_subsurfaces(ambient: SurfaceDatum) -> list[SurfaceDatum]:
    """Essential bounded subsurfaces of a bounded surface, up to homeomorphism, excluding the surface itself.

    Raises
    ------
    UnsupportedSurfaceError
        If the surface is closed.
    """
    if ambient.is_closed:
        raise UnsupportedSurfaceError(ambient, "subsurfaces are enumerated for bounded surfaces")
    found = []
    for piece in bounded_surfaces(ambient.euler_char, 0, ambient.orientable):
        if piece == ambient:
            continue
        if ambient.orientable and (piece.genus or 0) > (ambient.genus or 0):
            continue
        if not ambient.orientable and (2 * (piece.genus or 0) if piece.orientable else piece.crosscaps) > (
            ambient.crosscaps
        ):
            continue
        found.append(piece)
    return sorted(found)
