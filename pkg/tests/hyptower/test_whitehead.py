# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
# SPDX-License-Identifier: MIT
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyptower.whitehead import (
    SubgroupGraph,
    WhiteheadAutomorphism,
    generates_whole_group,
    is_basis,
    is_primitive,
    minimize,
    total_cyclic_length,
    whitehead_generators,
)
from hyptower.words import Alphabet, CyclicWord, GeneratorSymbol, Word, parse_word


F2 = Alphabet.free_basis(2)
TABLE = whitehead_generators(2)

moves = st.lists(st.integers(min_value=0, max_value=len(TABLE) - 1), max_size=6)


def _words(*texts):
    return [parse_word(text, F2) for text in texts]


@pytest.mark.parametrize("rank, count", [(1, 2), (2, 20), (3, 138)])
def test_generator_count(rank, count):
    """Test the size of the Whitehead table."""
    assert len(whitehead_generators(rank)) == count


def test_table_order():
    """Test that the table starts with the identity and lists signed permutations first."""
    assert TABLE[0].is_identity
    assert [automorphism.kind for automorphism in TABLE[:8]] == [1] * 8
    assert all(automorphism.kind == 2 for automorphism in TABLE[8:])
    assert TABLE[8].multiplier == GeneratorSymbol("a", 1)
    assert str(TABLE[8]) == "a -> a, b -> b a"


def test_inverse():
    """Test that every table entry composed with its inverse is the identity."""
    for automorphism in TABLE + whitehead_generators(3):
        identity = {name: Word.generator(automorphism.alphabet, name) for name in automorphism.alphabet}
        assert automorphism.then(automorphism.inverse()) == identity
        assert automorphism.inverse().kind == automorphism.kind


def test_multiplier_move():
    """Test the four choices of a multiplier move."""
    a = GeneratorSymbol("a", 1)
    images = [WhiteheadAutomorphism.multiplier_move(F2, a, (choice,)).images["b"] for choice in range(4)]
    assert [str(image) for image in images] == ["b", "b a", "a^-1 b", "a^-1 b a"]
    swap = WhiteheadAutomorphism.signed_permutation(F2, ("b", "a"), (1, -1))
    assert str(swap(parse_word("a b", F2))) == "b a^-1"
    assert str(swap.apply_cyclic(parse_word("a b a", F2))) == "b a^-1 b"


@pytest.mark.parametrize(
    "text, primitive",
    [("a", True), ("a a b", True), ("a b a^-1", True), ("a b a b^-1", False), ("a a", False), ("a b a^-1 b^-1", False)],
)
def test_is_primitive(text, primitive):
    """Test primitivity of single words."""
    assert is_primitive(parse_word(text, F2), 2) is primitive


def _nielsen_moves():
    moves = [{"a": "b", "b": "a"}, {"a": "a^-1", "b": "b"}, {"a": "a", "b": "b^-1"}]
    for x, y in (("a", "b"), ("b", "a")):
        moves.extend({x: image, y: y} for image in (f"{x} {y}", f"{x} {y}^-1", f"{y} {x}", f"{y}^-1 {x}"))
    return [{name: parse_word(text, F2) for name, text in move.items()} for move in moves]


def _primitive_classes(cap):
    moves = _nielsen_moves()
    orbit = {CyclicWord(parse_word("a", F2))}
    frontier = list(orbit)
    while frontier:
        following = []
        for cyclic in frontier:
            for move in moves:
                image = CyclicWord(cyclic.representative.substitute(move, F2))
                if len(image) <= cap and image not in orbit:
                    orbit.add(image)
                    following.append(image)
        frontier = following
    return orbit


def test_is_primitive_matches_orbit(reduced_words):
    """Test primitivity against the orbit of a under Nielsen moves, on cyclically reduced words up to length 5."""
    orbit = _primitive_classes(cap=8)
    assert CyclicWord(parse_word("a b^-1 a", F2)) in orbit
    for word in reduced_words(F2, 5):
        if len(CyclicWord(word)) != len(word):
            continue
        assert is_primitive(word, 2) is (CyclicWord(word) in orbit), word


def test_minimize():
    """Test that minimization lowers the total cyclic length step by step."""
    words = _words("a a b")
    minimized, applied = minimize(words, F2)
    assert total_cyclic_length(minimized) == 1
    assert applied
    current = [words[0]]
    for automorphism in applied:
        current = [automorphism.apply_cyclic(word) for word in current]
    assert tuple(current) == minimized
    assert minimize(_words("a b a^-1 b^-1"), 2) == (tuple(_words("a b a^-1 b^-1")), ())


@pytest.mark.parametrize(
    "texts, basis",
    [
        (("a", "b"), True),
        (("a b", "b"), True),
        (("b a", "a b a"), True),
        (("a a", "b"), False),
        (("a",), False),
        (("b a b^-1", "a b a^-1"), False),
    ],
)
def test_is_basis(texts, basis):
    """Test the basis check, including tuples that only minimize to a basis up to conjugation."""
    assert is_basis(_words(*texts), F2) is basis


def test_subgroup_graph():
    """Test Stallings folding."""
    graph = SubgroupGraph(F2, _words("a^2", "b"))
    assert graph.rank == 2
    assert len(graph.vertices) == 2
    assert not graph.is_rose()
    assert SubgroupGraph(F2, _words("a b", "b")).is_rose()
    assert SubgroupGraph(F2, _words("1")).rank == 0
    assert not generates_whole_group(_words("b a b^-1", "a b a^-1"), F2)
    assert generates_whole_group(_words("a b a^-1", "a"), F2)


@given(moves)
def test_automorphic_images_of_a_basis(indices):
    """Test that automorphic images of the standard basis are bases and their letters are primitive."""
    words = _words("a", "b")
    for index in indices:
        words = [TABLE[index](word) for word in words]
    assert is_basis(words, F2)
    assert is_primitive(words[0], F2)


@given(moves)
def test_minimization_is_orbit_invariant(indices):
    """Test that the minimal length of a tuple does not depend on the representative of its orbit."""
    words = _words("a a b^-1 a^-1 b^-1", "a b")
    for index in indices:
        words = [TABLE[index](word) for word in words]
    baseline, _ = minimize(_words("a a b^-1 a^-1 b^-1", "a b"), F2)
    minimized, _ = minimize(words, F2)
    assert total_cyclic_length(minimized) == total_cyclic_length(baseline)
