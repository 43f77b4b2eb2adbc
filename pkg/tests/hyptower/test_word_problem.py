# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
# SPDX-License-Identifier: MIT
import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyptower.catalog.free_products import zs_presentation
from hyptower.errors import UnsupportedModelError
from hyptower.groups import (
    AbelianInvariants,
    CertificateModel,
    DehnRewriter,
    FreeModel,
    FreeProductModel,
    InfiniteCyclicModel,
    Presentation,
    SmallCancellationModel,
    abelian_invariants,
    are_equal,
    classify,
    commute,
    free_product_normal_form,
    is_proper_power,
    is_trivial,
    max_piece_length,
    model_for,
    satisfies_c_prime_sixth,
    symmetrize,
)
from hyptower.surfaces import SurfaceDatum, standard_presentation
from hyptower.words import CyclicWord, Word, conjugate, parse_word


S2 = standard_presentation(SurfaceDatum.closed_orientable(2)).presentation
S4 = standard_presentation(SurfaceDatum.closed_nonorientable(4)).presentation

s2_words = st.lists(
    st.tuples(st.sampled_from(["a1", "a2", "a3", "a4"]), st.sampled_from([1, -1])), max_size=5
).map(lambda symbols: Word(S2.alphabet, symbols))


def test_presentation_basics():
    """Test parsing, printing and equality up to rotation and inversion."""
    torus = Presentation.parse(["a", "b"], ["a b = b a"])
    assert str(torus) == "< a, b | a b a^-1 b^-1 >"
    assert torus == Presentation.parse(["b", "a"], ["b a b^-1 a^-1"])
    assert hash(torus) == hash(Presentation.parse(["a", "b"], ["b^-1 a b a^-1"]))
    assert torus != Presentation(["a", "b"])
    assert str(Presentation(["h"])) == "< h >"
    assert torus.rename({"a": "x"}) == Presentation.parse(["x", "b"], ["x b x^-1 b^-1"])
    assert torus.with_generator("z").generators == ("a", "b", "z")
    with pytest.raises(ValueError):
        Presentation.parse(["a"], ["a a^-1"])


def test_simplify():
    """Test Tietze eliminations."""
    presentation = Presentation.parse(["a", "b", "c"], ["c = a b"])
    assert presentation.simplify() == Presentation(["a", "b"])
    kept = Presentation.parse(["a", "b", "c"], ["c = a b", "a b a^-1 b^-1"])
    assert kept.simplify() == Presentation.parse(["a", "b"], ["a b a^-1 b^-1"])


@pytest.mark.parametrize(
    "presentation, expected",
    [
        (S2, AbelianInvariants(4)),
        (S4, AbelianInvariants(3, (2,))),
        (Presentation.parse(["a", "b"], ["a^2", "b^3"]), AbelianInvariants(0, (6,))),
        (zs_presentation(), AbelianInvariants(5)),
        (Presentation([]), AbelianInvariants(0)),
    ],
)
def test_abelian_invariants(presentation, expected):
    """Test abelianizations through the Smith normal form."""
    assert abelian_invariants(presentation) == expected


def test_abelian_invariants_text():
    """Test printing abelian groups."""
    assert str(AbelianInvariants(3, (2,))) == "Z^3 + Z/2"
    assert str(AbelianInvariants(0)) == "0"
    assert AbelianInvariants.total([AbelianInvariants(1), AbelianInvariants(2, (3,))]) == AbelianInvariants(3, (3,))


def test_small_cancellation_conditions():
    """Test pieces and the C'(1/6) condition."""
    assert len(symmetrize(S2)) == 16
    assert max_piece_length(symmetrize(S2)) == 1
    assert satisfies_c_prime_sixth(S2)
    assert satisfies_c_prime_sixth(S4)
    assert not satisfies_c_prime_sixth(Presentation.parse(["a", "b"], ["a b a^-1 b^-1"]))
    assert is_proper_power(CyclicWord(parse_word("a b a b")))
    assert not is_proper_power(CyclicWord(parse_word("a b a b^-1")))
    with pytest.raises(UnsupportedModelError):
        symmetrize(Presentation.parse(["a", "b"], ["a^7", "b^7"]))


def test_classify():
    """Test strategy selection."""
    assert isinstance(classify(Presentation(["a", "b"])), FreeModel)
    assert isinstance(classify(Presentation(["z"])), InfiniteCyclicModel)
    assert isinstance(classify(S2), SmallCancellationModel)
    zs = classify(zs_presentation())
    assert isinstance(zs, FreeProductModel)
    assert [factor.kind for factor in zs.factors] == ["small cancellation", "infinite cyclic"]
    assert zs.presentation == zs_presentation()
    with pytest.raises(UnsupportedModelError):
        classify(Presentation.parse(["a", "b"], ["a b a b a b"]))
    with pytest.raises(UnsupportedModelError):
        classify(Presentation.parse(["a", "b"], ["a^7", "a b^7 a^-1 b^-1"]))


def test_certificate_model():
    """Test that unsupported presentations only certify relators."""
    model = model_for(Presentation.parse(["a", "b"], ["a b a^-1 b^-1"]))
    assert isinstance(model, CertificateModel)
    assert model.is_trivial(parse_word("b a^-1 b^-1 a", model.alphabet))
    assert model.is_trivial(parse_word("b a b^-1 a^-1", model.alphabet))
    assert model.is_trivial(Word.identity(model.alphabet))
    with pytest.raises(UnsupportedModelError):
        model.is_trivial(parse_word("a", model.alphabet))


def test_surface_group_word_problem():
    """Test Dehn's algorithm on the genus two surface group."""
    model = classify(S2)
    relator = S2.relators[0].representative
    assert is_trivial(relator, model)
    assert is_trivial(conjugate(relator, S2.word("a1 a3")), model)
    assert not is_trivial(S2.word("a1 a2 a1^-1 a2^-1"), model)
    assert are_equal(S2.word("a1 a2 a1^-1 a2^-1"), S2.word("a4 a3 a4^-1 a3^-1"), model)
    assert not commute(S2.word("a1"), S2.word("a2"), model)
    assert commute(S2.word("a1"), S2.word("a1^3"), model)


def test_short_words_are_nontrivial():
    """Test against enumeration: reduced words shorter than half the relator are never trivial."""
    model = classify(S2)
    symbols = S2.alphabet.symbols()
    for length in range(1, 4):
        for raw in itertools.product(symbols, repeat=length):
            word = Word(S2.alphabet, raw)
            assert model.is_trivial(word) is word.is_identity


@given(st.lists(st.tuples(s2_words, st.sampled_from([1, -1])), max_size=3))
def test_products_of_conjugated_relators_are_trivial(factors):
    """Test that products of conjugates of the relator are trivial."""
    relator = S2.relators[0].representative
    word = Word.identity(S2.alphabet)
    for conjugator, sign in factors:
        word = word * conjugate(relator if sign > 0 else ~relator, conjugator)
    assert classify(S2).is_trivial(word)


@given(s2_words)
def test_nonzero_exponents_are_nontrivial(word):
    """Test that words outside the commutator subgroup are non-trivial."""
    if any(word.exponent_vector()):
        assert not classify(S2).is_trivial(word)


def _relator_insertions(presentation, depth, cap):
    relators = symmetrize(presentation)
    found = {Word.identity(presentation.alphabet)}
    layer = set(found)
    for _ in range(depth):
        layer = {
            inserted
            for word in layer
            for index in range(len(word) + 1)
            for relator in relators
            if len(inserted := word[:index] * relator * word[index:]) <= cap
        } - found
        found |= layer
    return found


@pytest.mark.parametrize("presentation", [S2, S4], ids=["S2", "S4"])
def test_dehn_matches_relator_insertion(presentation, reduced_words):
    """Test Dehn's algorithm against words built by inserting relators and on every word of length at most six."""
    model = classify(presentation)
    trivial = _relator_insertions(presentation, depth=2, cap=16)
    assert len(trivial) > len(symmetrize(presentation)) + 1
    assert all(model.is_trivial(word) for word in trivial)
    short = {word for word in trivial if len(word) <= 6}
    for word in reduced_words(presentation.alphabet, 6):
        assert model.is_trivial(word) is (word in short)


def test_dehn_step_limit():
    """Test that the step limit is enforced."""
    relator = S2.relators[0].representative
    with pytest.raises(UnsupportedModelError):
        DehnRewriter(S2, step_limit=1).reduce(relator * relator)
    assert DehnRewriter(S2).reduce(relator * relator).is_identity


def test_infinite_cyclic():
    """Test the infinite cyclic model."""
    model = InfiniteCyclicModel("z")
    assert model.is_trivial(parse_word("z z z^-1 z^-1", model.alphabet))
    assert str(model.normal_form(parse_word("z z", model.alphabet))) == "z z"


def test_free_product_normal_form():
    """Test syllables of words in a free product."""
    model = classify(zs_presentation())
    syllables = free_product_normal_form(model.word("a z a^-1"), model)
    assert [(s.factor, str(s.word)) for s in syllables] == [(0, "a"), (1, "z"), (0, "a^-1")]
    assert not free_product_normal_form(model.word("z a b a^-1 b^-1 ap bp ap^-1 bp^-1 z^-1"), model)
    assert not commute(model.word("a"), model.word("z"), model)
    cyclic = InfiniteCyclicModel("z")
    single = free_product_normal_form(cyclic.word("z z"), cyclic)
    assert [(s.factor, str(s.word)) for s in single] == [(0, "z z")]
