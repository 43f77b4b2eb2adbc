# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Small constructors shared by the catalog encodings."""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

from hyptower.gog import (
    EdgeData,
    GraphOfGroupsWithSurfaces,
    PlainVertex,
    SurfaceVertex,
    VertexData,
    induced_presentation,
    plain_vertex_free_product,
    plain_vertex_presentation,
)
from hyptower.groups import Presentation, model_for
from hyptower.homs import GroupMap, adjoin_free_letter
from hyptower.surfaces import SurfaceDatum, standard_presentation
from hyptower.towers import Extension, FloorCandidate
from hyptower.words import parse_word


__all__ = ("plain", "surface", "edge", "floor")


def plain(vertex_id: str, generators: Iterable[str], relators: Iterable[str] = ()) -> PlainVertex:
    """A plain vertex from generator names and relator strings."""
    return PlainVertex(vertex_id, Presentation.parse(generators, relators))


def surface(vertex_id: str, datum: SurfaceDatum, names: Sequence[str] | None = None) -> SurfaceVertex:
    """A surface vertex with the standard presentation, generators renamed in order when ``names`` is given."""
    presentation = standard_presentation(datum)
    if names is not None:
        presentation = presentation.rename_positionally(names)
    return SurfaceVertex(vertex_id, datum, presentation)


def edge(
    edge_id: str,
    first: tuple[VertexData, str],
    second: tuple[VertexData, str],
    stable_letter: str | None = None,
) -> EdgeData:
    """An edge from ``(vertex, word)`` pairs; it is a tree edge unless a stable letter is given."""
    (u, first_word), (v, second_word) = first, second
    return EdgeData(
        edge_id,
        (u.id, v.id),
        (parse_word(first_word, u.alphabet), parse_word(second_word, v.alphabet)),
        tree=stable_letter is None,
        stable_letter=stable_letter,
    )


def floor(
    name: str,
    vertices: Iterable[VertexData],
    edges: Iterable[EdgeData],
    retraction: Mapping[str, str],
    extension: Mapping[str, str] | None = None,
    letter: str = "x",
    inclusion: Mapping[str, str] | None = None,
) -> FloorCandidate:
    """A floor candidate whose ``G`` and ``G'`` are read off the decomposition.

    Images are written in word syntax. ``extension`` gives ``r'`` on ``G * <letter>``; ``inclusion`` replaces the
    default inclusion of the plain vertex groups.
    """
    decomposition = GraphOfGroupsWithSurfaces(vertices, edges)
    group = induced_presentation(decomposition)
    target = plain_vertex_free_product(decomposition)
    r = GroupMap(group, target, retraction)
    extended = None
    if extension is not None:
        extended = Extension(
            letter,
            GroupMap(adjoin_free_letter(group, letter), adjoin_free_letter(target, letter), extension),
        )
    included = None
    if inclusion is not None:
        included = GroupMap(plain_vertex_presentation(decomposition), model_for(group), inclusion)
    return FloorCandidate(decomposition, r, included, extended, name)
