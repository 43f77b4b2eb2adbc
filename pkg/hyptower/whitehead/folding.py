# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Stallings folding of finitely generated subgroups of a free group."""
from __future__ import annotations

from collections.abc import Iterable

from hyptower.words import Alphabet, Word


__all__ = ("SubgroupGraph", "generates_whole_group")


class SubgroupGraph:
    """The folded core graph of a subgroup given by generating words.

    Each generator is laid out as a loop at the base vertex, then edges with the same label leaving or entering a
    vertex are identified until none remain.
    """

    __slots__ = ("_alphabet", "_parent", "_edges")

    def __init__(self, alphabet: Alphabet, words: Iterable[Word]):
        self._alphabet = alphabet
        self._parent: list[int] = [0]
        self._edges: set[tuple[int, str, int]] = set()
        for word in words:
            self._push_word(word.over(alphabet))
        self._fold()

    def _new_vertex(self) -> int:
        self._parent.append(len(self._parent))
        return len(self._parent) - 1

    def _push_word(self, word: Word) -> None:
        if word.is_identity:
            return
        current = 0
        for position, (name, sign) in enumerate(word):
            following = 0 if position == len(word) - 1 else self._new_vertex()
            self._edges.add((current, name, following) if sign > 0 else (following, name, current))
            current = following

    def _find(self, vertex: int) -> int:
        while self._parent[vertex] != vertex:
            self._parent[vertex] = self._parent[self._parent[vertex]]
            vertex = self._parent[vertex]
        return vertex

    def _fold(self) -> None:
        while True:
            self._edges = {(self._find(u), name, self._find(v)) for u, name, v in self._edges}
            pair = self._foldable_pair()
            if pair is None:
                return
            keep, drop = sorted(pair)
            self._parent[drop] = keep

    def _foldable_pair(self) -> tuple[int, int] | None:
        outgoing: dict[tuple[int, str], int] = {}
        incoming: dict[tuple[int, str], int] = {}
        for u, name, v in sorted(self._edges):
            other = outgoing.setdefault((u, name), v)
            if other != v:
                return other, v
            other = incoming.setdefault((v, name), u)
            if other != u:
                return other, u
        return None

    @property
    def vertices(self) -> frozenset[int]:
        """Vertices of the folded graph; 0 is the base vertex."""
        return frozenset({0} | {u for u, _, _ in self._edges} | {v for _, _, v in self._edges})

    @property
    def edges(self) -> frozenset[tuple[int, str, int]]:
        """Labelled edges ``(source, generator, target)``."""
        return frozenset(self._edges)

    @property
    def rank(self) -> int:
        """The rank of the subgroup: edges minus vertices plus one."""
        return len(self._edges) - len(self.vertices) + 1

    def is_rose(self) -> bool:
        """Whether the graph is one vertex with a loop for every generator, i.e. the subgroup is everything."""
        return self._edges == {(0, name, 0) for name in self._alphabet}

    def __repr__(self) -> str:
        return f"<SubgroupGraph vertices={len(self.vertices)} edges={len(self._edges)}>"


def generates_whole_group(words: Iterable[Word], alphabet: Alphabet) -> bool:
    """Whether the words generate the free group on ``alphabet``."""
    return SubgroupGraph(alphabet, words).is_rose()
