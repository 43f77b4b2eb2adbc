# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Generator symbols and alphabets."""
from __future__ import annotations

import re
import string
from collections import Counter
from collections.abc import Iterable, Iterator
from typing import NamedTuple

from hyptower.errors import AlphabetMismatchError, GeneratorCollisionError


__all__ = ("GeneratorSymbol", "Alphabet", "GENERATOR_NAME")

GENERATOR_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class GeneratorSymbol(NamedTuple):
    """A generator name with an exponent sign of +1 or -1."""

    name: str
    sign: int

    def inverse(self) -> GeneratorSymbol:
        """The same generator with the opposite sign."""
        return GeneratorSymbol(self.name, -self.sign)

    def __str__(self) -> str:
        return self.name if self.sign > 0 else f"{self.name}^-1"


class Alphabet:
    """An ordered, finite set of generator names.

    The order is used for display and for deterministic enumeration. Two alphabets compare equal when they contain
    the same names, regardless of order.

    Parameters
    ----------
    names : Iterable[str]
        Distinct generator names, each matching ``[A-Za-z_][A-Za-z0-9_]*``.

    Raises
    ------
    ValueError
        If a name is malformed or repeated.
    """

    __slots__ = ("_names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not GENERATOR_NAME.fullmatch(name):
                raise ValueError(f"Invalid generator name {name!r}.")
        if len(set(names)) != len(names):
            dupes = sorted(name for name, count in Counter(names).items() if count > 1)
            raise ValueError(f"Duplicate generator name(s) {', '.join(dupes)}.")
        self._names: tuple[str, ...] = names
        self._index: dict[str, int] = {name: i for i, name in enumerate(names)}

    @classmethod
    def free_basis(cls, rank: int) -> Alphabet:
        """Standard names for a basis of the given rank: a, b, c, ... or x1, x2, ... beyond 26."""
        if rank < 0:
            raise ValueError("Rank must be non-negative.")
        if rank <= len(string.ascii_lowercase):
            return cls(string.ascii_lowercase[:rank])
        return cls(f"x{i}" for i in range(1, rank + 1))

    @property
    def names(self) -> tuple[str, ...]:
        """The generator names in order."""
        return self._names

    def index(self, name: str) -> int:
        """The position of a name in the alphabet."""
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetMismatchError([name], self._names) from None

    def symbol_key(self, symbol: GeneratorSymbol) -> tuple[int, int]:
        """Sort key ordering a, a^-1, b, b^-1, ... by alphabet position."""
        return self.index(symbol.name), 0 if symbol.sign > 0 else 1

    def symbols(self) -> tuple[GeneratorSymbol, ...]:
        """All signed symbols in the order a, a^-1, b, b^-1, ..."""
        return tuple(GeneratorSymbol(name, sign) for name in self._names for sign in (1, -1))

    def check(self, names: Iterable[str]) -> None:
        """Raise `AlphabetMismatchError` unless every name is in the alphabet."""
        missing = [name for name in names if name not in self._index]
        if missing:
            raise AlphabetMismatchError(missing, self._names)

    def union(self, other: Alphabet | Iterable[str]) -> Alphabet:
        """This alphabet followed by the names of ``other`` that are not already present."""
        extra = [name for name in (other.names if isinstance(other, Alphabet) else other) if name not in self._index]
        return Alphabet(self._names + tuple(dict.fromkeys(extra)))

    def with_generator(self, name: str) -> Alphabet:
        """This alphabet with one fresh generator appended."""
        if name in self._index:
            raise GeneratorCollisionError(name)
        return Alphabet(self._names + (name,))

    def isdisjoint(self, other: Alphabet) -> bool:
        """Whether the two alphabets share no names."""
        return self._index.keys().isdisjoint(other._index.keys())

    def __le__(self, other: Alphabet) -> bool:
        return self._index.keys() <= other._index.keys()

    def __len__(self) -> int:
        return len(self._names)

    def __iter__(self) -> Iterator[str]:
        return iter(self._names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self._index.keys() == other._index.keys()

    def __hash__(self) -> int:
        return hash(frozenset(self._names))

    def __str__(self) -> str:
        return "{" + ", ".join(self._names) + "}"

    def __repr__(self) -> str:
        return f"<Alphabet names={self._names!r}>"
