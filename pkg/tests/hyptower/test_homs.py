# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
# SPDX-License-Identifier: MIT
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyptower.errors import AlphabetMismatchError, GeneratorCollisionError
from hyptower.groups import FreeModel, FreeProductModel, InfiniteCyclicModel, Presentation, model_for
from hyptower.homs import (
    GroupMap,
    adjoin_free_letter,
    apply,
    homomorphism_failures,
    identity_failures,
    nonabelian_image,
    sample_retraction,
    verify_homomorphism,
    verify_retraction,
)


G = Presentation.parse(["h", "a", "b", "c"], ["h^2 = a^2 b^2 c^2"])
H = InfiniteCyclicModel("h")
RETRACTION = {"h": "h", "a": "h", "b": "1", "c": "1"}


def _inclusion(image="h"):
    return GroupMap(H.presentation, model_for(G), {"h": image})


def test_group_map():
    """Test building and applying a map."""
    r = GroupMap(G, H, RETRACTION)
    assert r.source == G
    assert str(r.image("a")) == "h"
    assert str(apply(r, G.word("a b a^-1 c"))) == "1"
    assert str(r(G.word("a h"))) == "h h"
    with pytest.raises(TypeError):
        r.images["a"] = H.word("h")  # type: ignore[index]
    assert r == GroupMap(G, H, dict(RETRACTION))
    assert r != GroupMap(G, H, dict(RETRACTION, b="h"))
    assert GroupMap.identity_inclusion(H.presentation, model_for(G)) == _inclusion()


def test_group_map_errors():
    """Test missing images and foreign generators."""
    with pytest.raises(ValueError):
        GroupMap(G, H, {"h": "h"})
    with pytest.raises(AlphabetMismatchError):
        GroupMap(G, H, dict(RETRACTION, q="h"))
    with pytest.raises(AlphabetMismatchError):
        GroupMap(G, H, dict(RETRACTION, b="a"))


def test_homomorphism():
    """Test that relators must map to the identity."""
    assert verify_homomorphism(GroupMap(G, H, RETRACTION))
    bad = GroupMap(G, H, dict(RETRACTION, b="h"))
    assert not verify_homomorphism(bad)
    [(relator, image)] = homomorphism_failures(bad)
    assert relator == G.relators[0].representative
    assert str(image) == "h^-1 h^-1"


def test_retraction():
    """Test that a retraction restricts to the identity on the subgroup."""
    r = GroupMap(G, H, RETRACTION)
    assert verify_retraction(r, _inclusion())
    assert not identity_failures(r, _inclusion())
    assert verify_retraction(r, _inclusion("a"))
    wrong = _inclusion("b")
    assert not verify_retraction(r, wrong)
    assert [(name, str(value)) for name, value in identity_failures(r, wrong)] == [("h", "1")]


def test_retraction_must_compose():
    """Test that maps with mismatched groups are refused."""
    r = GroupMap(G, H, RETRACTION)
    other = GroupMap(Presentation(["k"]), model_for(G), {"k": "h"})
    with pytest.raises(AlphabetMismatchError):
        verify_retraction(r, other)


def test_nonabelian_image():
    """Test the non-abelian image check on the surface generators."""
    surface_generators = [G.word(name) for name in ("a", "b", "c")]
    assert not nonabelian_image(GroupMap(G, H, RETRACTION), surface_generators)
    extended_source = adjoin_free_letter(G, "x")
    extended_target = adjoin_free_letter(H, "x")
    extended = GroupMap(extended_source, extended_target, {"h": "h", "a": "h", "b": "x", "c": "x^-1", "x": "x"})
    assert verify_homomorphism(extended)
    assert nonabelian_image(extended, [extended_source.word(name) for name in ("a", "b", "c")])


def test_adjoin_free_letter():
    """Test adjoining a free letter to presentations and models."""
    assert adjoin_free_letter(Presentation(["h"]), "x").generators == ("h", "x")
    assert isinstance(adjoin_free_letter(FreeModel(["a"]), "x"), FreeModel)
    product = adjoin_free_letter(H, "x")
    assert isinstance(product, FreeProductModel)
    assert not product.commute(product.word("h"), product.word("x"))
    with pytest.raises(GeneratorCollisionError):
        adjoin_free_letter(H, "h")
    with pytest.raises(GeneratorCollisionError):
        adjoin_free_letter(G, "a")
    with pytest.raises(TypeError):
        adjoin_free_letter(3, "x")


def test_extended_map():
    """Test that extending a map sends the new letter to itself."""
    extended = GroupMap(G, H, RETRACTION).extended("x")
    assert str(extended.image("x")) == "x"
    assert extended.source.generators == ("h", "a", "b", "c", "x")
    assert verify_homomorphism(extended)


@given(st.integers(min_value=0, max_value=2**32))
def test_sampling_accepts_retractions(seed):
    """Test that sampling finds no counterexample to a true retraction."""
    r = GroupMap(G, H, RETRACTION)
    assert sample_retraction(r, _inclusion(), 10, 8, random.Random(seed)) == []


def test_sampling_finds_counterexamples():
    """Test that sampling catches a map that is not the identity on the subgroup."""
    r = GroupMap(G, H, RETRACTION)
    bad = sample_retraction(r, _inclusion("b"), 50, 10, random.Random(0))
    assert bad
    assert all(not word.is_identity for word in bad)
