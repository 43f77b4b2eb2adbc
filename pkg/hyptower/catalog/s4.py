# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Floors and towers of the closed non-orientable surface with four crosscaps.

Both floor structures are extended floors over ``<h>``: with a Möbius band complement the surface piece is the
once-punctured non-orientable surface with three crosscaps, and with an annulus complement it is the twice-punctured
Klein bottle glued along both boundary curves.
"""
from __future__ import annotations

from hyptower.groups import Presentation
from hyptower.surfaces import SurfaceDatum, standard_presentation
from hyptower.towers import BaseWitness, FloorCandidate, GroundFloor, TowerCandidate

from .builders import edge, floor, plain, surface


__all__ = ("N4", "s4_presentation", "moebius_floor", "klein_floor", "trivial_tower", "moebius_tower", "klein_tower")

N4 = SurfaceDatum.closed_nonorientable(4)


def s4_presentation() -> Presentation:
    """``<d1, d2, d3, d4 | d1^2 d2^2 d3^2 d4^2>``."""
    return standard_presentation(N4).presentation


def moebius_floor(name: str = "s4-moebius-floor") -> FloorCandidate:
    """``<h, a, b, c | h^2 = a^2 b^2 c^2>`` retracting onto ``<h>`` only after adjoining ``x``."""
    h = plain("H", ["h"])
    sigma = surface("Sigma", SurfaceDatum(False, -2, 1), ["a", "b", "c"])
    return floor(
        name,
        [h, sigma],
        [edge("e", (h, "h^2"), (sigma, "a^2 b^2 c^2"))],
        retraction={"h": "h", "a": "h", "b": "1", "c": "1"},
        extension={"h": "h", "a": "h", "b": "x", "c": "x^-1", "x": "x"},
    )


def klein_floor(name: str = "s4-klein-floor") -> FloorCandidate:
    """``<h, a, b, t | h t h t^-1 = a^2 b^2>`` after eliminating the tree-edge boundary generator ``g = h``."""
    h = plain("H", ["h"])
    sigma = surface("Sigma", SurfaceDatum(False, -2, 2), ["a", "b", "g"])
    return floor(
        name,
        [h, sigma],
        [
            edge("e1", (h, "h"), (sigma, "g")),
            edge("e2", (h, "h"), (sigma, "g^-1 a^2 b^2"), stable_letter="t"),
        ],
        retraction={"h": "h", "a": "h", "b": "1", "g": "h", "t": "1"},
        extension={"h": "h", "a": "h x", "b": "x^-1", "g": "h", "t": "x", "x": "x"},
    )


def _cyclic_ground() -> GroundFloor:
    return GroundFloor(Presentation(["h"]), 0, ())


def trivial_tower() -> TowerCandidate:
    """No floors: the group is its own ground floor, a single closed surface."""
    return TowerCandidate(s4_presentation(), [], [], GroundFloor(None, 0, (N4,)), "s4-trivial-tower")


def moebius_tower() -> TowerCandidate:
    """One extended floor down to ``<h>``."""
    candidate = moebius_floor()
    return TowerCandidate(
        candidate.source,
        [candidate],
        [BaseWitness("H", (candidate.target.word("h"),))],
        _cyclic_ground(),
        "s4-moebius-tower",
    )


def klein_tower() -> TowerCandidate:
    """One extended floor down to ``<h>``, through the Klein bottle structure."""
    candidate = klein_floor()
    return TowerCandidate(
        candidate.source,
        [candidate],
        [BaseWitness("H", (candidate.target.word("h"),))],
        _cyclic_ground(),
        "s4-klein-tower",
    )
