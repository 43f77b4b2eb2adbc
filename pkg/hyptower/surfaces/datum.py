# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Compact surfaces described by orientability, Euler characteristic and number of boundary components."""
from __future__ import annotations

import re

from hyptower.errors import DocumentParseError, InvalidSurfaceError


__all__ = (
    "SurfaceDatum",
    "euler_from_presentation_data",
    "connected_sum",
    "puncture",
    "homeomorphic",
    "mixed_form_to_crosscaps",
    "is_floor_admissible",
)

_LITERAL = re.compile(
    r"\s*surface\(\s*(?P<kind>orientable|nonorientable|non-orientable)\s*,\s*(?P<chi>[+-]?\d+)\s*,"
    r"\s*(?P<boundary>\d+)\s*\)\s*"
)
_PUNCTURES = {1: "once", 2: "twice", 3: "thrice"}


def _punctured(boundary: int, noun: str) -> str:
    if not boundary:
        return noun
    return f"{_PUNCTURES.get(boundary, str(boundary))}-punctured {noun}"


class SurfaceDatum:
    """A compact surface up to homeomorphism.

    Parameters
    ----------
    orientable : bool
        Whether the surface is orientable.
    euler_char : int
        The Euler characteristic.
    boundary_count : int
        The number of boundary components.

    Raises
    ------
    InvalidSurfaceError
        If no compact surface has this data.
    """

    __slots__ = ("_orientable", "_euler_char", "_boundary_count")

    def __init__(self, orientable: bool, euler_char: int, boundary_count: int):
        if boundary_count < 0:
            raise InvalidSurfaceError(f"boundary count must be non-negative, got {boundary_count}")
        if euler_char > 2:
            raise InvalidSurfaceError(f"Euler characteristic {euler_char} exceeds 2")
        total = euler_char + boundary_count
        if orientable and (total % 2 or total > 2):
            raise InvalidSurfaceError(
                f"an orientable surface with {boundary_count} boundary component(s) cannot have Euler "
                f"characteristic {euler_char}"
            )
        if not orientable and total > 1:
            raise InvalidSurfaceError(
                f"a non-orientable surface with {boundary_count} boundary component(s) has Euler characteristic at "
                f"most {1 - boundary_count}, got {euler_char}"
            )
        self._orientable = bool(orientable)
        self._euler_char = euler_char
        self._boundary_count = boundary_count

    @classmethod
    def closed_orientable(cls, genus: int) -> SurfaceDatum:
        """The closed orientable surface of the given genus."""
        return cls(True, 2 - 2 * genus, 0)

    @classmethod
    def closed_nonorientable(cls, crosscaps: int) -> SurfaceDatum:
        """The connected sum of ``crosscaps`` projective planes."""
        if crosscaps < 1:
            raise InvalidSurfaceError("a non-orientable surface needs at least one crosscap")
        return cls(False, 2 - crosscaps, 0)

    @classmethod
    def parse(cls, text: str) -> SurfaceDatum:
        """Parse ``surface(orientable|nonorientable, chi, boundary)``."""
        match = _LITERAL.fullmatch(text)
        if match is None:
            raise DocumentParseError(
                f"Malformed surface literal {text!r}, expected surface(orientable|nonorientable, chi, boundary)", 1, 1
            )
        return cls(match["kind"] == "orientable", int(match["chi"]), int(match["boundary"]))

    @property
    def orientable(self) -> bool:
        """Whether the surface is orientable."""
        return self._orientable

    @property
    def euler_char(self) -> int:
        """The Euler characteristic."""
        return self._euler_char

    @property
    def boundary_count(self) -> int:
        """The number of boundary components."""
        return self._boundary_count

    @property
    def is_closed(self) -> bool:
        """Whether the surface has empty boundary."""
        return self._boundary_count == 0

    @property
    def genus(self) -> int | None:
        """The orientable genus, or None for non-orientable surfaces."""
        if not self._orientable:
            return None
        return (2 - self._euler_char - self._boundary_count) // 2

    @property
    def crosscaps(self) -> int:
        """The number of projective plane summands; 0 for orientable surfaces."""
        if self._orientable:
            return 0
        return 2 - self._euler_char - self._boundary_count

    @property
    def name(self) -> str:
        """A conventional name such as "once-punctured torus" or "Möbius band"."""
        b = self._boundary_count
        if self._orientable:
            genus = self.genus
            if genus == 0:
                return {0: "sphere", 1: "disk", 2: "cylinder"}.get(b) or _punctured(b, "sphere")
            if genus == 1:
                return _punctured(b, "torus")
            return _punctured(b, f"orientable surface of genus {genus}")
        crosscaps = self.crosscaps
        if crosscaps == 1:
            return "Möbius band" if b == 1 else _punctured(b, "projective plane")
        if crosscaps == 2:
            return _punctured(b, "Klein bottle")
        return _punctured(b, f"non-orientable surface with {crosscaps} crosscaps")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        """Orientable first, then decreasing Euler characteristic, then boundary count."""
        return (0 if self._orientable else 1, -self._euler_char, self._boundary_count)

    def literal(self) -> str:
        """The ``surface(...)`` literal that parses back to this datum."""
        kind = "orientable" if self._orientable else "nonorientable"
        return f"surface({kind}, {self._euler_char}, {self._boundary_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurfaceDatum):
            return NotImplemented
        return (self._orientable, self._euler_char, self._boundary_count) == (
            other._orientable,
            other._euler_char,
            other._boundary_count,
        )

    def __lt__(self, other: SurfaceDatum) -> bool:
        return self.sort_key < other.sort_key

    def __hash__(self) -> int:
        return hash((self._orientable, self._euler_char, self._boundary_count))

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return (
            f"<SurfaceDatum orientable={self._orientable} euler_char={self._euler_char} "
            f"boundary_count={self._boundary_count}>"
        )


def euler_from_presentation_data(orientable: bool, count: int, boundary: int) -> int:
    """Euler characteristic from the number of handles (orientable) or crosscaps, and boundary components."""
    if count < 0 or boundary < 0:
        raise InvalidSurfaceError("handle, crosscap and boundary counts must be non-negative")
    if not orientable and count < 1:
        raise InvalidSurfaceError("a non-orientable surface needs at least one crosscap")
    return 2 - (2 * count if orientable else count) - boundary


def connected_sum(first: SurfaceDatum, second: SurfaceDatum) -> SurfaceDatum:
    """The connected sum; Euler characteristics add minus 2 and boundaries add."""
    return SurfaceDatum(
        first.orientable and second.orientable,
        first.euler_char + second.euler_char - 2,
        first.boundary_count + second.boundary_count,
    )


def puncture(surface: SurfaceDatum) -> SurfaceDatum:
    """Remove an open disk."""
    return SurfaceDatum(surface.orientable, surface.euler_char - 1, surface.boundary_count + 1)


def homeomorphic(first: SurfaceDatum, second: SurfaceDatum) -> bool:
    """Compact surfaces are classified by their data."""
    return first == second


def mixed_form_to_crosscaps(handles: int, crosscaps: int) -> int:
    """Crosscap count of ``handles`` tori summed with ``crosscaps >= 1`` projective planes."""
    if crosscaps < 1:
        raise InvalidSurfaceError("the mixed form needs at least one crosscap")
    if handles < 0:
        raise InvalidSurfaceError("handle count must be non-negative")
    return 2 * handles + crosscaps


def is_floor_admissible(surface: SurfaceDatum) -> bool:
    """Whether a bounded surface may be a surface piece of a floor.

    Admissible pieces are the once-punctured torus and every surface with Euler characteristic at most -2.

    Raises
    ------
    InvalidSurfaceError
        If the surface is closed.
    """
    if surface.is_closed:
        raise InvalidSurfaceError(f"floor admissibility is defined for bounded surfaces, {surface} is closed")
    if surface.orientable and surface.euler_char == -1 and surface.boundary_count == 1:
        return True
    return surface.euler_char <= -2
