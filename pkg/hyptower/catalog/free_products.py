# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Floors of ``<a, ap, b, bp, z | [a, b][ap, bp]>``, the free product of a genus two surface group with ``Z``.

The group has two floor structures over non-conjugate free subgroups. Over ``<a, b, z>`` the surface piece is a
once-punctured torus glued along its boundary to ``[b, a]``. Over ``<u, w>`` it is a four times punctured sphere
glued by one tree edge and three edges carrying stable letters.
"""
from __future__ import annotations

from hyptower.gog import PlainVertex
from hyptower.groups import Presentation
from hyptower.surfaces import SurfaceDatum
from hyptower.towers import BaseWitness, FloorCandidate, GroundFloor, TowerCandidate

from .builders import edge, floor, plain, surface


__all__ = (
    "zs_presentation",
    "h1_floor",
    "h1_wrong_retraction",
    "h2_floor",
    "trivial_tower",
    "h1_tower",
    "h2_tower",
    "two_floor_tower",
)

PUNCTURED_TORUS = SurfaceDatum(True, -1, 1)
FOUR_PUNCTURED_SPHERE = SurfaceDatum(True, -2, 4)


def zs_presentation() -> Presentation:
    """``<a, ap, b, bp, z | [a, b][ap, bp]>``."""
    return Presentation.parse(["a", "ap", "b", "bp", "z"], ["a b a^-1 b^-1 ap bp ap^-1 bp^-1"])


def _h1_decomposition(name: str, retraction: dict[str, str]) -> FloorCandidate:
    h1 = plain("H1", ["a", "b", "z"])
    sigma = surface("Sigma", PUNCTURED_TORUS, ["ap", "bp"])
    return floor(
        name,
        [h1, sigma],
        [edge("e", (h1, "b a b^-1 a^-1"), (sigma, "ap bp ap^-1 bp^-1"))],
        retraction,
    )


def h1_floor() -> FloorCandidate:
    """The floor over ``<a, b, z>``; ``r`` folds the punctured torus onto the first handle."""
    return _h1_decomposition("zs-h1-floor", {"a": "a", "b": "b", "z": "z", "ap": "b", "bp": "a"})


def h1_wrong_retraction() -> FloorCandidate:
    """The same decomposition with a map that is not a homomorphism."""
    return _h1_decomposition("zs-h1-wrong-retraction", {"a": "a", "b": "b", "z": "z", "ap": "a", "bp": "a"})


def h2_floor() -> FloorCandidate:
    """The floor over ``<u, w>`` with a four times punctured sphere."""
    h2 = plain("H2", ["u", "w"])
    sigma = surface("Sigma", FOUR_PUNCTURED_SPHERE)
    return floor(
        "zs-h2-floor",
        [h2, sigma],
        [
            edge("e1", (h2, "u"), (sigma, "g1")),
            edge("e2", (h2, "u^-1"), (sigma, "g2"), stable_letter="t2"),
            edge("e3", (h2, "w"), (sigma, "g3"), stable_letter="t3"),
            edge("e4", (h2, "w^-1"), (sigma, "g3^-1 g2^-1 g1^-1"), stable_letter="t4"),
        ],
        {"u": "u", "w": "w", "g1": "u", "g2": "u^-1", "g3": "w", "t2": "1", "t3": "1", "t4": "1"},
    )


def trivial_tower() -> TowerCandidate:
    """No floors: ``Z * S`` for the closed genus two surface ``S``."""
    ground = GroundFloor(None, 1, (SurfaceDatum.closed_orientable(2),))
    return TowerCandidate(zs_presentation(), [], [], ground, "zs-trivial-tower")


def h1_tower() -> TowerCandidate:
    """One floor down to ``<a, b, z>``."""
    candidate = h1_floor()
    words = tuple(candidate.target.word(name) for name in ("a", "b", "z"))
    ground = GroundFloor(Presentation.free(["a", "b", "z"]), 0, ())
    return TowerCandidate(candidate.source, [candidate], [BaseWitness("H1", words)], ground, "zs-h1-tower")


def h2_tower() -> TowerCandidate:
    """One floor down to ``<u, w>``."""
    candidate = h2_floor()
    words = tuple(candidate.target.word(name) for name in ("u", "w"))
    ground = GroundFloor(Presentation.free(["u", "w"]), 0, ())
    return TowerCandidate(candidate.source, [candidate], [BaseWitness("H2", words)], ground, "zs-h2-tower")


def two_floor_tower() -> TowerCandidate:
    """A punctured torus glued to ``[a, z]`` on top of the floor over ``<a, b, z>``."""
    top = PlainVertex("ZS", zs_presentation())
    sigma = surface("Sigma", PUNCTURED_TORUS, ["c", "d"])
    upper = floor(
        "zs-upper-floor",
        [top, sigma],
        [edge("e", (top, "a z a^-1 z^-1"), (sigma, "c d c^-1 d^-1"))],
        {"a": "a", "ap": "ap", "b": "b", "bp": "bp", "z": "z", "c": "a", "d": "z"},
    )
    lower = h1_floor()
    witnesses = [
        BaseWitness("ZS", tuple(upper.target.word(name) for name in ("a", "b", "z"))),
        BaseWitness("H1", tuple(lower.target.word(name) for name in ("a", "b", "z"))),
    ]
    ground = GroundFloor(Presentation.free(["a", "b", "z"]), 0, ())
    return TowerCandidate(upper.source, [upper, lower], witnesses, ground, "zs-two-floor-tower")
