# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Small literals used in input documents: maps, edge embeddings and normalized words."""
from __future__ import annotations

import re
from collections.abc import Mapping

from hyptower.errors import DocumentParseError
from hyptower.words import GENERATOR_NAME


__all__ = ("normalize_word", "parse_map", "format_map", "parse_embedding", "format_embedding")

_MAP = re.compile(r"^\s*map\s*\{(?P<body>.*)\}\s*$", re.DOTALL)
_ARROW = re.compile(r"^\s*(?P<name>\S+)\s*->\s*(?P<image>.+?)\s*$", re.DOTALL)


def normalize_word(text: str) -> str:
    """Collapse whitespace and drop surrounding quotes; the word itself is checked when the document is built."""
    text = text.strip()
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "\"'":
        text = text[1:-1]
    return " ".join(text.split()) or "1"


def _check_name(name: str, where: str) -> str:
    if not GENERATOR_NAME.fullmatch(name):
        raise DocumentParseError(f"{name!r} is not a generator name in {where}")
    return name


def parse_map(value: str | Mapping[str, str], where: str = "map") -> dict[str, str]:
    """Generator images from ``map { a -> h, b -> "x^-1" }`` or from a table of strings.

    Raises
    ------
    DocumentParseError
        On malformed syntax, a repeated generator or a non-string image.
    """
    if isinstance(value, Mapping):
        images = {}
        for name, image in value.items():
            if not isinstance(image, str):
                raise DocumentParseError(f"image of {name} in {where} must be a string, got {image!r}")
            images[_check_name(name, where)] = normalize_word(image)
        return images
    match = _MAP.match(value)
    if match is None:
        raise DocumentParseError(f"{where} must look like 'map {{ a -> word, ... }}', got {value!r}")
    images = {}
    for item in filter(None, (part.strip() for part in match["body"].split(","))):
        pair = _ARROW.match(item)
        if pair is None:
            raise DocumentParseError(f"{item!r} in {where} is not of the form 'name -> word'")
        name = _check_name(pair["name"], where)
        if name in images:
            raise DocumentParseError(f"{name} is mapped twice in {where}")
        images[name] = normalize_word(pair["image"])
    return images


def format_map(images: Mapping[str, str]) -> str:
    """The ``map { ... }`` literal of a set of images."""
    if not images:
        return "map { }"
    return "map { " + ", ".join(f'{name} -> "{image}"' for name, image in images.items()) + " }"


def parse_embedding(text: str, where: str = "edge") -> tuple[str, str]:
    """Split ``vertex: word`` into the vertex id and the normalized word.

    Raises
    ------
    DocumentParseError
        If there is no colon or the vertex id is empty.
    """
    vertex, sep, word = text.partition(":")
    if not sep or not vertex.strip():
        raise DocumentParseError(f"embedding {text!r} in {where} must look like 'vertex: word'")
    return vertex.strip(), normalize_word(word)


def format_embedding(vertex: str, word: str) -> str:
    """The ``vertex: word`` literal."""
    return f"{vertex}: {word}"
