# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Floors of closed surface groups over a free group of rank two.

For genus ``g >= 2`` the orientable surface is cut along a curve separating the first handle, leaving a surface of
genus ``g - 1`` with one boundary curve; the retraction folds its first handle back onto the first one. The
non-orientable version uses the first two crosscaps and works from five crosscaps on; with four crosscaps the
remaining piece is a punctured Klein bottle, which is not admissible, and the group is instead handled by an
extended floor or by replacing the plain vertex with a larger group.
"""
from __future__ import annotations

from hyptower.surfaces import SurfaceDatum
from hyptower.towers import FloorCandidate

from .builders import edge, floor, plain, surface
from .s4 import moebius_floor


__all__ = ("orientable_floor", "nonorientable_floor", "nonorientable_extended", "nonorientable_free_product")


def orientable_floor(genus: int) -> FloorCandidate:
    """The floor of the genus ``genus`` surface group over ``<a1, b1>``."""
    if genus < 2:
        raise ValueError(f"Genus must be at least 2, got {genus}.")
    names = [f"{letter}{i}" for i in range(2, genus + 1) for letter in ("a", "b")]
    h = plain("H", ["a1", "b1"])
    sigma = surface("Sigma", SurfaceDatum(True, 3 - 2 * genus, 1), names)
    boundary = " ".join(f"a{i} b{i} a{i}^-1 b{i}^-1" for i in range(2, genus + 1))
    images = {name: "1" for name in names}
    images.update({"a1": "a1", "b1": "b1", "a2": "b1", "b2": "a1"})
    return floor(
        f"p0-template-orientable-{genus}",
        [h, sigma],
        [edge("e", (h, "b1 a1 b1^-1 a1^-1"), (sigma, boundary))],
        images,
    )


def nonorientable_floor(crosscaps: int) -> FloorCandidate:
    """The floor of the surface group with ``crosscaps`` crosscaps over ``<d1, d2>``.

    Below five crosscaps the surface piece is not admissible and the candidate is rejected.
    """
    if crosscaps < 3:
        raise ValueError(f"At least 3 crosscaps are needed, got {crosscaps}.")
    names = [f"d{i}" for i in range(3, crosscaps + 1)]
    h = plain("H", ["d1", "d2"])
    sigma = surface("Sigma", SurfaceDatum(False, 3 - crosscaps, 1), names)
    boundary = " ".join(f"{name}^2" for name in names)
    images = {name: "1" for name in names}
    images.update({"d1": "d1", "d2": "d2", "d3": "d2^-1"})
    if crosscaps > 3:
        images["d4"] = "d1^-1"
    return floor(
        f"p0-template-nonorientable-{crosscaps}",
        [h, sigma],
        [edge("e", (h, "d2^-2 d1^-2"), (sigma, boundary))],
        images,
    )


def nonorientable_extended() -> FloorCandidate:
    """Four crosscaps through an extended floor over ``<h>``."""
    return moebius_floor("p0-template-nonorientable-4-extended")


def nonorientable_free_product() -> FloorCandidate:
    """Four crosscaps over ``<h> * <e1, e2, e3, e4 | [e1, e2][e3, e4]>``.

    The genus two surface group in the plain vertex supplies the non-abelian images.
    """
    h = plain("H", ["h", "e1", "e2", "e3", "e4"], ["e1 e2 e1^-1 e2^-1 e3 e4 e3^-1 e4^-1"])
    sigma = surface("Sigma", SurfaceDatum(False, -2, 1), ["a", "b", "c"])
    return floor(
        "p0-template-nonorientable-4-free-product",
        [h, sigma],
        [edge("e", (h, "h^2"), (sigma, "a^2 b^2 c^2"))],
        {"h": "h", "e1": "e1", "e2": "e2", "e3": "e3", "e4": "e4", "a": "h", "b": "e1", "c": "e1^-1"},
    )
