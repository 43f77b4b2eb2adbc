# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
# SPDX-License-Identifier: MIT
import logging

import pytest

from hyptower.catalog.builders import edge, plain, surface
from hyptower.errors import InvalidStructureError
from hyptower.gog import (
    EdgeData,
    GraphOfGroupsWithSurfaces,
    SurfaceVertex,
    induced_presentation,
    plain_vertex_free_product,
    plain_vertex_presentation,
    validate_structure,
)
from hyptower.groups import FreeModel, InfiniteCyclicModel, Presentation
from hyptower.surfaces import SurfaceDatum, standard_presentation
from hyptower.words import Word


PUNCTURED_3 = SurfaceDatum(False, -2, 1)
CYLINDER = SurfaceDatum(True, 0, 2)


def _moebius(**overrides):
    h = plain("H", ["h"])
    sigma = surface("Sigma", PUNCTURED_3, overrides.get("names", ["a", "b", "c"]))
    word = overrides.get("boundary", "a^2 b^2 c^2")
    return GraphOfGroupsWithSurfaces([h, sigma], [edge("e", (h, "h^2"), (sigma, word))] + overrides.get("extra", []))


def _failed(g):
    return {check.name for check in validate_structure(g).all_checks if check.failed}


def test_valid_structure(caplog):
    """Test that a well formed floor decomposition passes every check."""
    caplog.set_level(logging.DEBUG, logger="hyptower.gog")
    report = validate_structure(_moebius())
    assert report.valid
    assert not _failed(_moebius())
    assert [check.name for check in report.floor_checks] == ["bipartism", "non-triviality"]
    assert "boundary bijection at Sigma" in {check.name for check in report.checks}
    assert any(record.name == "hyptower.gog" for record in caplog.records)


def test_induced_presentation_tree():
    """Test the presentation of a tree of groups."""
    presentation = induced_presentation(_moebius())
    assert presentation.generators == ("h", "a", "b", "c")
    assert presentation == Presentation.parse(["h", "a", "b", "c"], ["h^2 = a^2 b^2 c^2"])
    assert str(presentation.relators[0]) == "h h c^-1 c^-1 b^-1 b^-1 a^-1 a^-1"


def test_induced_presentation_stable_letter():
    """Test that edges outside the tree contribute a stable letter."""
    h = plain("H", ["h"])
    annulus = surface("A", CYLINDER, ["g"])
    g = GraphOfGroupsWithSurfaces(
        [h, annulus],
        [edge("e1", (h, "h"), (annulus, "g")), edge("e2", (h, "h"), (annulus, "g^-1"), stable_letter="t")],
    )
    assert validate_structure(g).valid
    assert g.stable_letters == ("t",)
    assert [e.id for e in g.spanning_tree] == ["e1"]
    presentation = induced_presentation(g)
    assert presentation.generators == ("h", "g", "t")
    assert presentation == Presentation.parse(["h", "g", "t"], ["h = g", "t h t^-1 = g^-1"])


def test_plain_vertex_groups():
    """Test the free product of the plain vertex groups."""
    g = _moebius()
    assert plain_vertex_presentation(g) == Presentation(["h"])
    assert isinstance(plain_vertex_free_product(g), InfiniteCyclicModel)
    only_surface = GraphOfGroupsWithSurfaces([surface("Sigma", PUNCTURED_3)])
    assert isinstance(plain_vertex_free_product(only_surface), FreeModel)


@pytest.mark.parametrize(
    "overrides, failed",
    [
        ({"names": ["h", "b", "c"], "boundary": "h^2 b^2 c^2"}, "vertex alphabets disjoint"),
        ({"boundary": "a^2 b^2"}, "boundary bijection at Sigma"),
    ],
)
def test_invalid_structure(overrides, failed):
    """Test that structural failures are reported."""
    assert failed in _failed(_moebius(**overrides))


def test_embedding_outside_vertex_group():
    """Test that an embedding word must live in its endpoint's group."""
    h = plain("H", ["h"])
    sigma = surface("Sigma", PUNCTURED_3, ["a", "b", "c"])
    boundary = sigma.boundary_words[0]
    g = GraphOfGroupsWithSurfaces([h, sigma], [EdgeData("e", ("H", "Sigma"), (boundary, boundary))])
    assert "edge embeddings in vertex groups" in _failed(g)
    trivial = GraphOfGroupsWithSurfaces(
        [h, sigma], [EdgeData("e", ("H", "Sigma"), (Word.identity(h.alphabet), boundary))]
    )
    assert "edge embeddings in vertex groups" in _failed(trivial)


def test_connectivity_and_tree():
    """Test connectivity, the spanning tree and stable letters."""
    h = plain("H", ["h"])
    k = plain("K", ["k"])
    sigma = surface("Sigma", PUNCTURED_3, ["a", "b", "c"])
    disconnected = GraphOfGroupsWithSurfaces([h, k, sigma], [edge("e", (h, "h^2"), (sigma, "a^2 b^2 c^2"))])
    assert {"connectivity", "spanning tree"} <= _failed(disconnected)
    dangling = GraphOfGroupsWithSurfaces(
        [h, sigma],
        [
            edge("e", (h, "h^2"), (sigma, "a^2 b^2 c^2")),
            EdgeData("f", ("H", "K"), (h.presentation.word("h"), h.presentation.word("h"))),
        ],
    )
    assert "edge endpoints exist" in _failed(dangling)
    missing_letter = GraphOfGroupsWithSurfaces(
        [h, sigma], [EdgeData("e", ("H", "Sigma"), (h.presentation.word("h^2"), sigma.boundary_words[0]), tree=False)]
    )
    assert {"spanning tree", "stable letters fresh"} <= _failed(missing_letter)
    annulus = surface("A", CYLINDER, ["g"])
    stale = GraphOfGroupsWithSurfaces(
        [h, annulus],
        [edge("e1", (h, "h"), (annulus, "g")), edge("e2", (h, "h"), (annulus, "g^-1"), stable_letter="h")],
    )
    assert "stable letters fresh" in _failed(stale)


def test_floor_checks():
    """Test bipartism and non-triviality, which do not affect validity."""
    h = plain("H", ["h"])
    k = plain("K", ["k"])
    g = GraphOfGroupsWithSurfaces([h, k], [edge("e", (h, "h"), (k, "k"))])
    report = validate_structure(g)
    assert report.valid
    assert {"bipartism", "non-triviality"} == {check.name for check in report.floor_checks if check.failed}
    assert induced_presentation(g) == Presentation.parse(["h", "k"], ["h = k"])


def test_invalid_structure_error():
    """Test that the induced presentation refuses invalid structures."""
    with pytest.raises(InvalidStructureError) as excinfo:
        induced_presentation(_moebius(boundary="a^2 b^2"))
    assert not excinfo.value.report.valid
    assert "boundary bijection at Sigma" in str(excinfo.value)


def test_graph_ids():
    """Test repeated ids and boundary word counts."""
    h = plain("H", ["h"])
    with pytest.raises(ValueError):
        GraphOfGroupsWithSurfaces([h, plain("H", ["k"])])
    with pytest.raises(ValueError):
        SurfaceVertex("S", CYLINDER, standard_presentation(PUNCTURED_3))
    g = _moebius()
    assert g.vertex("Sigma").surface == PUNCTURED_3
    assert [e.id for e in g.incident_edges("H")] == ["e"]
    assert sorted(g.graph().nodes) == ["H", "Sigma"]
