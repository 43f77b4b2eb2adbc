# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
# SPDX-License-Identifier: MIT
import textwrap
from collections.abc import Iterator

import pytest
from hypothesis import settings

from hyptower.words import Alphabet, Word


settings.register_profile("hyptower", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("hyptower")


S4_DOCUMENT = textwrap.dedent(
    """\
    [presentations.cyclic]
    generators = ["h"]
    relators = []

    [decompositions.moebius]
    vertices = [
        { id = "H", generators = ["h"], relators = [] },
        { id = "Sigma", surface = "surface(nonorientable, -2, 1)", names = ["a", "b", "c"] },
    ]
    edges = [{ id = "e", embedding_at = ["H: h^2", "Sigma: a^2 b^2 c^2"], tree = true }]

    [floors.moebius]
    decomposition = "moebius"
    retraction = "map { h -> h, a -> h, b -> 1, c -> 1 }"
    extension = { letter = "x", retraction = "map { h -> h, a -> h, b -> x, c -> x^-1, x -> x }" }

    [floors.moebius-unextended]
    decomposition = "moebius"
    retraction = "map { h -> h, a -> h, b -> 1, c -> 1 }"

    [towers.s4]
    floors = ["moebius"]
    witnesses = [{ vertex = "H", words = ["h"] }]
    ground = { subgroup = "cyclic", free_rank = 0, surfaces = [] }
    """
)


@pytest.fixture
def f2() -> Alphabet:
    """The alphabet {a, b}."""
    return Alphabet(["a", "b"])


@pytest.fixture
def s4_document() -> str:
    """A document with the Möbius band floor of four crosscaps."""
    return S4_DOCUMENT


@pytest.fixture
def s4_file(tmp_path, s4_document) -> str:
    """The Möbius band document written to a file."""
    path = tmp_path / "s4.toml"
    path.write_text(s4_document, encoding="utf-8")
    return str(path)


@pytest.fixture
def reduced_words():
    """Every freely reduced word over an alphabet up to a given length, shortest first."""

    def enumerate_words(alphabet: Alphabet, max_length: int) -> Iterator[Word]:
        symbols = alphabet.symbols()
        layer: list[tuple] = [()]
        yield Word.identity(alphabet)
        for _ in range(max_length):
            layer = [raw + (symbol,) for raw in layer for symbol in symbols if not raw or symbol != raw[-1].inverse()]
            yield from (Word(alphabet, raw) for raw in layer)

    return enumerate_words
