# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT

"""Alphabet errors."""
from collections.abc import Iterable


class AlphabetMismatchError(ValueError):
    """Alphabet mismatch error.

    Raised when a word mentions generators that the alphabet it is checked against does not contain,
    or when two words over different alphabets are combined.

    Parameters
    ----------
    names : Iterable[str]
        The offending generator names.
    alphabet : Iterable[str]
        The generator names that were expected.
    """

    def __init__(self, names: Iterable[str], alphabet: Iterable[str]):
        """Init."""
        super().__init__()
        self.names: tuple[str, ...] = tuple(sorted(set(names)))
        self.alphabet: tuple[str, ...] = tuple(alphabet)
        self.message = (
            f"Generator(s) {', '.join(repr(name) for name in self.names)} not in alphabet "
            f"{{{', '.join(self.alphabet)}}}."
        )

    def __str__(self):
        """Get the error as a string."""
        return self.message


class GeneratorCollisionError(ValueError):
    """Generator collision error.

    Raised when a generator that should be fresh is already part of an alphabet.

    Parameters
    ----------
    name : str
        The generator name that collides.
    """

    def __init__(self, name: str):
        """Init."""
        super().__init__()
        self.name = name
        self.message = f"Generator {name!r} is already in use and cannot be adjoined."

    def __str__(self):
        """Get the error as a string."""
        return self.message
