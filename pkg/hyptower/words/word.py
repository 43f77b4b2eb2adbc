# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Freely reduced words over an alphabet.

Words are written as whitespace separated tokens: a generator name, optionally followed by ``^k`` for a non-zero
integer power, so ``a b^-1 a^2`` is a valid word. The identity is written ``1``.
"""
from __future__ import annotations

import random
import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from typing import overload

from hyptower.errors import AlphabetMismatchError, DocumentParseError

from .alphabet import Alphabet, GeneratorSymbol


__all__ = (
    "Word",
    "parse_word",
    "reduce",
    "compose",
    "invert",
    "conjugate",
    "commutator",
    "random_word",
)

_TOKEN = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\^(?P<exp>[+-]?\d+))?")

SymbolLike = GeneratorSymbol | tuple[str, int]


def _cancel(left: tuple[GeneratorSymbol, ...], right: tuple[GeneratorSymbol, ...]) -> tuple[GeneratorSymbol, ...]:
    """Concatenate two reduced symbol tuples, cancelling at the junction."""
    i = 0
    limit = min(len(left), len(right))
    while i < limit and left[-1 - i].name == right[i].name and left[-1 - i].sign == -right[i].sign:
        i += 1
    return left[: len(left) - i] + right[i:]


def _free_reduce(alphabet: Alphabet, symbols: Iterable[SymbolLike]) -> tuple[GeneratorSymbol, ...]:
    stack: list[GeneratorSymbol] = []
    missing: list[str] = []
    for name, sign in symbols:
        if name not in alphabet:
            missing.append(name)
            continue
        if sign not in (1, -1):
            raise ValueError(f"Generator sign must be 1 or -1, got {sign!r}.")
        if stack and stack[-1].name == name and stack[-1].sign == -sign:
            stack.pop()
        else:
            stack.append(GeneratorSymbol(name, sign))
    if missing:
        raise AlphabetMismatchError(missing, alphabet.names)
    return tuple(stack)


def _inverse_symbols(symbols: Sequence[GeneratorSymbol]) -> tuple[GeneratorSymbol, ...]:
    return tuple(GeneratorSymbol(name, -sign) for name, sign in reversed(symbols))


class Word:
    """A freely reduced word over a fixed alphabet.

    Construction always reduces, so two words are equal exactly when they are equal in the free group on their
    alphabet.

    Parameters
    ----------
    alphabet : Alphabet
        The alphabet the word lives over.
    symbols : Iterable[GeneratorSymbol | tuple[str, int]]
        The symbols of a possibly unreduced word.

    Raises
    ------
    AlphabetMismatchError
        If a symbol's generator is not in the alphabet.
    """

    __slots__ = ("_alphabet", "_symbols")

    def __init__(self, alphabet: Alphabet, symbols: Iterable[SymbolLike] = ()):
        self._alphabet = alphabet
        self._symbols = _free_reduce(alphabet, symbols)

    @classmethod
    def _trusted(cls, alphabet: Alphabet, symbols: tuple[GeneratorSymbol, ...]) -> Word:
        word = cls.__new__(cls)
        word._alphabet = alphabet
        word._symbols = symbols
        return word

    @classmethod
    def identity(cls, alphabet: Alphabet) -> Word:
        """The empty word."""
        return cls._trusted(alphabet, ())

    @classmethod
    def generator(cls, alphabet: Alphabet, name: str, sign: int = 1) -> Word:
        """The one-letter word ``name^sign``."""
        return cls(alphabet, [(name, sign)])

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet) -> Word:
        """Parse a word from its text form, see `parse_word`."""
        return parse_word(text, alphabet)

    @property
    def alphabet(self) -> Alphabet:
        """The alphabet the word lives over."""
        return self._alphabet

    @property
    def symbols(self) -> tuple[GeneratorSymbol, ...]:
        """The reduced symbols."""
        return self._symbols

    @property
    def is_identity(self) -> bool:
        """Whether this is the empty word."""
        return not self._symbols

    @property
    def letters(self) -> frozenset[str]:
        """The generator names that occur."""
        return frozenset(symbol.name for symbol in self._symbols)

    def exponent_sum(self, name: str) -> int:
        """Total exponent of one generator."""
        return sum(symbol.sign for symbol in self._symbols if symbol.name == name)

    def exponent_vector(self, order: Iterable[str] | None = None) -> tuple[int, ...]:
        """Exponent sums of each generator, in alphabet order unless another order is given."""
        return tuple(self.exponent_sum(name) for name in (self._alphabet if order is None else order))

    def over(self, alphabet: Alphabet) -> Word:
        """The same word regarded over another alphabet containing all its letters."""
        if alphabet is self._alphabet:
            return self
        alphabet.check(self.letters)
        return Word._trusted(alphabet, self._symbols)

    def substitute(self, images: Mapping[str, Word], alphabet: Alphabet) -> Word:
        """Replace every generator by its image and reduce over ``alphabet``."""
        result: tuple[GeneratorSymbol, ...] = ()
        for name, sign in self._symbols:
            image = images[name].over(alphabet)._symbols
            result = _cancel(result, image if sign > 0 else _inverse_symbols(image))
        return Word._trusted(alphabet, result)

    def _check_compatible(self, other: Word) -> None:
        if self._alphabet != other._alphabet:
            raise AlphabetMismatchError(set(self._alphabet) ^ set(other._alphabet), self._alphabet.names)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        self._check_compatible(other)
        return Word._trusted(self._alphabet, _cancel(self._symbols, other._symbols))

    def __invert__(self) -> Word:
        return Word._trusted(self._alphabet, _inverse_symbols(self._symbols))

    def __pow__(self, exponent: int) -> Word:
        base = self if exponent >= 0 else ~self
        result = Word.identity(self._alphabet)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[GeneratorSymbol]:
        return iter(self._symbols)

    @overload
    def __getitem__(self, item: int) -> GeneratorSymbol:
        ...

    @overload
    def __getitem__(self, item: slice) -> Word:
        ...

    def __getitem__(self, item: int | slice) -> GeneratorSymbol | Word:
        if isinstance(item, slice):
            return Word._trusted(self._alphabet, self._symbols[item])
        return self._symbols[item]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._symbols == other._symbols and self._alphabet == other._alphabet

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __str__(self) -> str:
        if not self._symbols:
            return "1"
        return " ".join(str(symbol) for symbol in self._symbols)

    def __repr__(self) -> str:
        return f"<Word '{self}' over {self._alphabet}>"


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse a word.

    Parameters
    ----------
    text : str
        Whitespace separated tokens ``name`` or ``name^k``; ``1`` alone is the identity.
    alphabet : Alphabet | None
        The alphabet to parse over. When omitted the alphabet is made of the names in order of appearance.

    Returns
    -------
    Word
        The freely reduced word.

    Raises
    ------
    DocumentParseError
        On a malformed token. The column points at the token.
    AlphabetMismatchError
        If a generator is not in the given alphabet.
    """
    symbols: list[GeneratorSymbol] = []
    tokens = list(re.finditer(r"\S+", text))
    if len(tokens) == 1 and tokens[0].group() == "1":
        tokens = []
    for token in tokens:
        match = _TOKEN.fullmatch(token.group())
        if match is None:
            hint = " (inverses are written name^-1)" if "'" in token.group() else ""
            raise DocumentParseError(f"Malformed word token {token.group()!r}{hint}", 1, token.start() + 1)
        exponent = int(match["exp"]) if match["exp"] is not None else 1
        sign = 1 if exponent > 0 else -1
        symbols.extend(GeneratorSymbol(match["name"], sign) for _ in range(abs(exponent)))
    if alphabet is None:
        alphabet = Alphabet(dict.fromkeys(symbol.name for symbol in symbols))
    return Word(alphabet, symbols)


def reduce(raw: str | Iterable[SymbolLike], alphabet: Alphabet) -> Word:
    """Freely reduce a raw word given as text or as a sequence of symbols."""
    if isinstance(raw, str):
        return parse_word(raw, alphabet)
    return Word(alphabet, raw)


def compose(first: Word, second: Word) -> Word:
    """The reduced product ``first * second``."""
    return first * second


def invert(word: Word) -> Word:
    """The inverse word."""
    return ~word


def conjugate(word: Word, by: Word) -> Word:
    """``by * word * by^-1``."""
    return by * word * ~by


def commutator(x: Word, y: Word) -> Word:
    """``x y x^-1 y^-1``."""
    return x * y * ~x * ~y


def random_word(alphabet: Alphabet, max_length: int, rng: random.Random) -> Word:
    """A random reduced word of length at most ``max_length``."""
    symbols = alphabet.symbols()
    if not symbols:
        return Word.identity(alphabet)
    raw = [rng.choice(symbols) for _ in range(rng.randint(0, max_length))]
    return Word(alphabet, raw)
