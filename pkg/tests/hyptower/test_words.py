# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
# SPDX-License-Identifier: MIT
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyptower.errors import AlphabetMismatchError, DocumentParseError, GeneratorCollisionError
from hyptower.words import (
    Alphabet,
    CyclicWord,
    GeneratorSymbol,
    Word,
    canonical_rotation,
    commutator,
    conjugate,
    cyclic_reduce,
    invert,
    is_genus_one_commutator,
    parse_word,
    random_word,
    reduce,
)


F3 = Alphabet(["a", "b", "c"])

words = st.lists(st.tuples(st.sampled_from(["a", "b", "c"]), st.sampled_from([1, -1])), max_size=8).map(
    lambda symbols: Word(F3, symbols)
)


def test_alphabet():
    """Test alphabet construction and lookups."""
    alphabet = Alphabet(["a", "b"])
    assert alphabet.names == ("a", "b")
    assert alphabet.index("b") == 1
    assert [str(symbol) for symbol in alphabet.symbols()] == ["a", "a^-1", "b", "b^-1"]
    assert alphabet.union(["b", "c"]).names == ("a", "b", "c")
    assert Alphabet(["b", "a"]) == alphabet
    assert str(alphabet) == "{a, b}"
    with pytest.raises(GeneratorCollisionError):
        alphabet.with_generator("a")
    with pytest.raises(AlphabetMismatchError):
        alphabet.index("z")


@pytest.mark.parametrize("names", [["a", "a"], ["1a"], ["a-b"]])
def test_alphabet_rejects_bad_names(names):
    """Test that repeated or malformed names are rejected."""
    with pytest.raises(ValueError):
        Alphabet(names)


def test_free_basis():
    """Test standard basis names."""
    assert Alphabet.free_basis(3).names == ("a", "b", "c")
    assert Alphabet.free_basis(27).names[-1] == "x27"


def test_parse_and_reduce(f2):
    """Test parsing reduces freely."""
    word = parse_word("a b b^-1 a^2 b^-2", f2)
    assert str(word) == "a a a b^-1 b^-1"
    assert len(word) == 5
    assert parse_word("1", f2).is_identity
    assert str(parse_word("a a^-1", f2)) == "1"
    assert reduce([("a", 1), ("b", 1), ("b", -1)], f2) == parse_word("a", f2)
    assert parse_word("b a").alphabet.names == ("b", "a")


def test_parse_errors(f2):
    """Test malformed tokens and foreign generators."""
    with pytest.raises(DocumentParseError) as info:
        parse_word("a b'", f2)
    assert info.value.column == 3
    assert "name^-1" in str(info.value)
    with pytest.raises(AlphabetMismatchError):
        parse_word("a c", f2)


def test_operations(f2):
    """Test products, inverses, conjugates and commutators."""
    a, b = parse_word("a", f2), parse_word("b", f2)
    assert str(commutator(a, b)) == "a b a^-1 b^-1"
    assert str(conjugate(a, b)) == "b a b^-1"
    assert invert(a * b) == ~b * ~a
    assert (a * b) ** -2 == ~b * ~a * ~b * ~a
    assert (a * b).exponent_vector() == (1, 1)
    assert commutator(a, b).letters == frozenset({"a", "b"})


def test_mismatched_alphabets():
    """Test words over different alphabets do not multiply."""
    with pytest.raises(AlphabetMismatchError):
        parse_word("a") * parse_word("b")


def test_cyclic_reduce(f2):
    """Test cyclic reduction returns the core and the conjugator."""
    core, conjugator = cyclic_reduce(parse_word("a b a b^-1 a^-1", f2))
    assert str(core.representative) == "a"
    assert str(conjugator) == "a b"
    core, conjugator = cyclic_reduce(parse_word("b a b^-1", f2))
    assert str(core.representative) == "a"
    assert str(conjugator) == "b"


def test_cyclic_words(f2):
    """Test cyclic words compare up to rotation."""
    first = CyclicWord(parse_word("a b a^-1 b^-1", f2))
    second = CyclicWord(parse_word("b^-1 a b a^-1", f2))
    assert first == second
    assert hash(first) == hash(second)
    assert first != first.inverse()
    assert len(first.rotations()) == 4
    assert CyclicWord(parse_word("b a b^-1", f2)) == CyclicWord(parse_word("a", f2))


def test_canonical_rotation():
    """Test the least rotation puts positive letters before inverses."""
    symbols = (GeneratorSymbol("b", 1), GeneratorSymbol("a", -1), GeneratorSymbol("a", -1), GeneratorSymbol("a", 1))
    assert canonical_rotation(symbols)[0] == GeneratorSymbol("a", 1)
    assert canonical_rotation(()) == ()


@given(words)
def test_inverse_cancels(word):
    """Test a word times its inverse is the identity."""
    assert (word * ~word).is_identity
    assert ~~word == word


@given(words, words)
def test_commutator_recognised(x, y):
    """Test every commutator has a witness whose pieces rebuild the matched rotation."""
    word = commutator(x, y)
    witness = is_genus_one_commutator(word)
    assert witness is not None
    symbols = cyclic_reduce(word)[0].representative.symbols
    rotation = Word(F3, symbols[witness.offset :] + symbols[: witness.offset])
    assert commutator(*witness.as_commutator()) == rotation


@given(words)
def test_commutator_needs_zero_exponent_sums(word):
    """Test words with a non-zero exponent sum are never commutators."""
    if any(word.exponent_vector()):
        assert is_genus_one_commutator(word) is None


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a b a^-1 b^-1", True),
        ("a^2 b a^-2 b^-1", True),
        ("b a b^-1 a^-1", True),
        ("a b c a^-1 b^-1 c^-1", True),
        ("a^2 b^2", False),
        ("a b a^-1 b^-1 a b a^-1 b^-1", False),
        ("a b a b^-1", False),
        ("1", True),
    ],
)
def test_genus_one_commutator(text, expected):
    """Test recognition of conjugates of commutators."""
    assert (is_genus_one_commutator(parse_word(text, F3)) is not None) is expected


def test_genus_one_commutator_matches_search(f2, reduced_words):
    """Test the commutator test against every [x, y] with |x|, |y| <= 4, on cyclically reduced words up to length 6."""
    short = list(reduced_words(f2, 4))
    commutators = {CyclicWord(commutator(x, y)) for x in short for y in short}
    for word in reduced_words(f2, 6):
        if len(cyclic_reduce(word)[0]) != len(word):
            continue
        assert (is_genus_one_commutator(word) is not None) is (CyclicWord(word) in commutators), word


def test_witness_text():
    """Test the witness pieces of [a, b]."""
    witness = is_genus_one_commutator(parse_word("a b a^-1 b^-1", F3))
    assert str(witness) == "A = a, B = b, C = 1"


def test_random_word():
    """Test random words are reduced and bounded."""
    rng = random.Random(3)
    for _ in range(50):
        word = random_word(F3, 6, rng)
        assert len(word) <= 6
        assert Word(F3, word.symbols) == word
    assert random_word(Alphabet([]), 6, rng).is_identity
