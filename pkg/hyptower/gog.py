# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Graphs of groups with surfaces.

Vertices are either plain, carrying an arbitrary presentation, or surface type, carrying the standard presentation
of a bounded surface with its boundary words. Every edge group is infinite cyclic and is described by one embedding
word at each endpoint. Edges in the chosen spanning tree identify their two embedding words; every other edge has a
stable letter ``t`` and contributes ``t w1 t^-1 = w2``.
"""
from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable
from typing import TypeAlias

import networkx as nx

from hyptower.checks import CheckResult
from hyptower.errors import AlphabetMismatchError, InvalidStructureError
from hyptower.groups import FreeModel, GroupModel, Presentation, classify
from hyptower.surfaces import SurfaceDatum, SurfacePresentation
from hyptower.words import GENERATOR_NAME, Alphabet, Word


__all__ = (
    "PlainVertex",
    "SurfaceVertex",
    "VertexData",
    "EdgeData",
    "GraphOfGroupsWithSurfaces",
    "StructureReport",
    "validate_structure",
    "induced_presentation",
    "plain_vertex_presentation",
    "plain_vertex_free_product",
)

logger = logging.getLogger("hyptower.gog")

GRAPH_CLAUSE = "graph of groups with surfaces"
BIPARTISM_CLAUSE = "bipartism"
NONTRIVIAL_CLAUSE = "non-trivial decomposition (read as: at least one edge and one surface vertex)"


class PlainVertex:
    """A vertex carrying an arbitrary presentation."""

    __slots__ = ("_id", "_presentation")

    def __init__(self, id: str, presentation: Presentation):  # skipcq: PYL-W0622
        self._id = id
        self._presentation = presentation

    @property
    def id(self) -> str:
        """The vertex id."""
        return self._id

    @property
    def presentation(self) -> Presentation:
        """The vertex group presentation."""
        return self._presentation

    @property
    def alphabet(self) -> Alphabet:
        """The vertex generators."""
        return self._presentation.alphabet

    def __repr__(self) -> str:
        return f"<PlainVertex id={self._id!r} presentation={self._presentation}>"


class SurfaceVertex:
    """A vertex carrying a bounded surface and its standard presentation.

    Raises
    ------
    ValueError
        If the number of boundary words differs from the surface's boundary count.
    """

    __slots__ = ("_id", "_surface", "_surface_presentation")

    def __init__(self, id: str, surface: SurfaceDatum, surface_presentation: SurfacePresentation):  # skipcq: PYL-W0622
        if len(surface_presentation.boundary_words) != surface.boundary_count:
            raise ValueError(
                f"Surface vertex {id!r} has {len(surface_presentation.boundary_words)} boundary word(s) but the "
                f"{surface.name} has {surface.boundary_count} boundary component(s)."
            )
        self._id = id
        self._surface = surface
        self._surface_presentation = surface_presentation

    @property
    def id(self) -> str:
        """The vertex id."""
        return self._id

    @property
    def surface(self) -> SurfaceDatum:
        """The surface."""
        return self._surface

    @property
    def surface_presentation(self) -> SurfacePresentation:
        """The presentation with boundary words."""
        return self._surface_presentation

    @property
    def presentation(self) -> Presentation:
        """The vertex group presentation."""
        return self._surface_presentation.presentation

    @property
    def alphabet(self) -> Alphabet:
        """The vertex generators."""
        return self._surface_presentation.alphabet

    @property
    def boundary_words(self) -> tuple[Word, ...]:
        """The designated boundary words."""
        return self._surface_presentation.boundary_words

    def __repr__(self) -> str:
        return f"<SurfaceVertex id={self._id!r} surface={self._surface.literal()}>"


VertexData: TypeAlias = PlainVertex | SurfaceVertex


class EdgeData:
    """An edge with infinite cyclic edge group.

    Parameters
    ----------
    id : str
        The edge id.
    endpoints : tuple[str, str]
        Ids of the two endpoint vertices.
    embeddings : tuple[Word, Word]
        The image of the edge generator in each endpoint's vertex group, in endpoint order.
    tree : bool
        Whether the edge belongs to the spanning tree.
    stable_letter : str | None
        The fresh generator for an edge outside the spanning tree.
    """

    __slots__ = ("_id", "_endpoints", "_embeddings", "_tree", "_stable_letter")

    def __init__(
        self,
        id: str,  # skipcq: PYL-W0622
        endpoints: tuple[str, str],
        embeddings: tuple[Word, Word],
        tree: bool = True,
        stable_letter: str | None = None,
    ):
        self._id = id
        self._endpoints = tuple(endpoints)
        self._embeddings = tuple(embeddings)
        self._tree = tree
        self._stable_letter = stable_letter

    @property
    def id(self) -> str:
        """The edge id."""
        return self._id

    @property
    def endpoints(self) -> tuple[str, str]:
        """The endpoint vertex ids."""
        return self._endpoints  # type: ignore[return-value]

    @property
    def embeddings(self) -> tuple[Word, Word]:
        """The embedding words, in endpoint order."""
        return self._embeddings  # type: ignore[return-value]

    @property
    def tree(self) -> bool:
        """Whether the edge is in the spanning tree."""
        return self._tree

    @property
    def stable_letter(self) -> str | None:
        """The stable letter of a non-tree edge."""
        return self._stable_letter

    def embedding_at(self, vertex_id: str) -> Word:
        """The embedding word at one endpoint."""
        for endpoint, word in zip(self._endpoints, self._embeddings):
            if endpoint == vertex_id:
                return word
        raise KeyError(vertex_id)

    def __repr__(self) -> str:
        ends = ", ".join(f"{v}: {w}" for v, w in zip(self._endpoints, self._embeddings))
        return f"<EdgeData id={self._id!r} embeddings=({ends}) tree={self._tree} stable_letter={self._stable_letter!r}>"


class GraphOfGroupsWithSurfaces:
    """Vertices and edges of a graph of groups with surfaces.

    Raises
    ------
    ValueError
        If vertex or edge ids repeat.
    """

    __slots__ = ("_vertices", "_edges", "_by_id")

    def __init__(self, vertices: Iterable[VertexData], edges: Iterable[EdgeData] = ()):
        self._vertices = tuple(vertices)
        self._edges = tuple(edges)
        for kind, ids in (("vertex", [v.id for v in self._vertices]), ("edge", [e.id for e in self._edges])):
            repeated = sorted(name for name, count in Counter(ids).items() if count > 1)
            if repeated:
                raise ValueError(f"Repeated {kind} id(s): {', '.join(repeated)}.")
        self._by_id = {vertex.id: vertex for vertex in self._vertices}

    @property
    def vertices(self) -> tuple[VertexData, ...]:
        """The vertices in order."""
        return self._vertices

    @property
    def edges(self) -> tuple[EdgeData, ...]:
        """The edges in order."""
        return self._edges

    @property
    def spanning_tree(self) -> tuple[EdgeData, ...]:
        """The edges marked as tree edges."""
        return tuple(edge for edge in self._edges if edge.tree)

    @property
    def stable_letters(self) -> tuple[str, ...]:
        """Stable letters of the non-tree edges, in edge order."""
        return tuple(edge.stable_letter for edge in self._edges if not edge.tree and edge.stable_letter)

    @property
    def plain_vertices(self) -> tuple[PlainVertex, ...]:
        """The plain vertices."""
        return tuple(vertex for vertex in self._vertices if isinstance(vertex, PlainVertex))

    @property
    def surface_vertices(self) -> tuple[SurfaceVertex, ...]:
        """The surface type vertices."""
        return tuple(vertex for vertex in self._vertices if isinstance(vertex, SurfaceVertex))

    def vertex(self, vertex_id: str) -> VertexData:
        """Look up a vertex by id."""
        return self._by_id[vertex_id]

    def incident_edges(self, vertex_id: str) -> tuple[EdgeData, ...]:
        """Edges with the vertex as an endpoint; a loop is listed once."""
        return tuple(edge for edge in self._edges if vertex_id in edge.endpoints)

    def graph(self) -> nx.MultiGraph:
        """The underlying multigraph, keyed by edge id."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(vertex.id for vertex in self._vertices)
        for edge in self._edges:
            if all(endpoint in self._by_id for endpoint in edge.endpoints):
                graph.add_edge(*edge.endpoints, key=edge.id, tree=edge.tree)
        return graph

    def __repr__(self) -> str:
        return f"<GraphOfGroupsWithSurfaces vertices={len(self._vertices)} edges={len(self._edges)}>"


class StructureReport:
    """Structure checks of a graph of groups with surfaces.

    ``valid`` covers the checks needed for an induced presentation. Bipartism and non-triviality are only required
    of floors and are reported separately.
    """

    __slots__ = ("_checks", "_floor_checks")

    def __init__(self, checks: Iterable[CheckResult], floor_checks: Iterable[CheckResult]):
        self._checks = tuple(checks)
        self._floor_checks = tuple(floor_checks)

    @property
    def checks(self) -> tuple[CheckResult, ...]:
        """The structural checks."""
        return self._checks

    @property
    def floor_checks(self) -> tuple[CheckResult, ...]:
        """Bipartism and non-triviality."""
        return self._floor_checks

    @property
    def all_checks(self) -> tuple[CheckResult, ...]:
        """Every check in report order."""
        return self._checks + self._floor_checks

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        """Failed structural checks."""
        return tuple(check for check in self._checks if check.failed)

    @property
    def valid(self) -> bool:
        """Whether every structural check passed."""
        return not self.failures

    def __repr__(self) -> str:
        return f"<StructureReport valid={self.valid} checks={len(self.all_checks)}>"


def _check_alphabets(g: GraphOfGroupsWithSurfaces) -> CheckResult:
    owners: dict[str, str] = {}
    clashes = []
    for vertex in g.vertices:
        for name in vertex.alphabet:
            if name in owners:
                clashes.append(f"{name} in {owners[name]} and {vertex.id}")
            owners.setdefault(name, vertex.id)
    return CheckResult.of("vertex alphabets disjoint", GRAPH_CLAUSE, not clashes, "; ".join(clashes))


def _check_edges(g: GraphOfGroupsWithSurfaces) -> list[CheckResult]:
    endpoint_problems = []
    embedding_problems = []
    for edge in g.edges:
        if len(edge.endpoints) != 2 or len(edge.embeddings) != 2:
            endpoint_problems.append(f"{edge.id} needs two endpoints and two embedding words")
            continue
        for endpoint, word in zip(edge.endpoints, edge.embeddings):
            if endpoint not in {vertex.id for vertex in g.vertices}:
                endpoint_problems.append(f"{edge.id} has unknown endpoint {endpoint}")
                continue
            try:
                word.over(g.vertex(endpoint).alphabet)
            except AlphabetMismatchError as exc:
                embedding_problems.append(f"{edge.id} at {endpoint}: {exc}")
                continue
            if word.is_identity:
                embedding_problems.append(f"{edge.id} at {endpoint}: trivial embedding word")
    return [
        CheckResult.of("edge endpoints exist", GRAPH_CLAUSE, not endpoint_problems, "; ".join(endpoint_problems)),
        CheckResult.of(
            "edge embeddings in vertex groups", GRAPH_CLAUSE, not embedding_problems, "; ".join(embedding_problems)
        ),
    ]


def _check_connectivity(g: GraphOfGroupsWithSurfaces, graph: nx.MultiGraph) -> CheckResult:
    if not g.vertices:
        return CheckResult.of("connectivity", GRAPH_CLAUSE, False, "no vertices")
    components = nx.number_connected_components(graph)
    return CheckResult.of(
        "connectivity", GRAPH_CLAUSE, components == 1, "" if components == 1 else f"{components} components"
    )


def _check_spanning_tree(g: GraphOfGroupsWithSurfaces) -> CheckResult:
    tree = nx.MultiGraph()
    tree.add_nodes_from(vertex.id for vertex in g.vertices)
    tree.add_edges_from(edge.endpoints for edge in g.spanning_tree if len(edge.endpoints) == 2)
    ok = bool(g.vertices) and nx.is_tree(tree)
    detail = (
        "" if ok else f"{len(g.spanning_tree)} tree edge(s) do not form a spanning tree of {len(g.vertices)} vertices"
    )
    return CheckResult.of("spanning tree", GRAPH_CLAUSE, ok, detail)


def _check_stable_letters(g: GraphOfGroupsWithSurfaces) -> CheckResult:
    problems = []
    used = {name for vertex in g.vertices for name in vertex.alphabet}
    for edge in g.edges:
        letter = edge.stable_letter
        if edge.tree:
            if letter is not None:
                problems.append(f"tree edge {edge.id} has stable letter {letter}")
        elif letter is None:
            problems.append(f"edge {edge.id} is outside the tree but has no stable letter")
        elif not GENERATOR_NAME.fullmatch(letter):
            problems.append(f"edge {edge.id} has malformed stable letter {letter!r}")
        elif letter in used:
            problems.append(f"stable letter {letter} of edge {edge.id} is not fresh")
        else:
            used.add(letter)
    return CheckResult.of("stable letters fresh", GRAPH_CLAUSE, not problems, "; ".join(problems))


def _check_boundary(g: GraphOfGroupsWithSurfaces, vertex: SurfaceVertex) -> CheckResult:
    used: list[Word] = []
    for edge in g.edges:
        for endpoint, word in zip(edge.endpoints, edge.embeddings):
            if endpoint == vertex.id:
                used.append(word)
    expected = list(vertex.boundary_words)
    problems = []
    if len(used) != len(expected):
        problems.append(f"{len(used)} incident edge end(s) for {len(expected)} boundary component(s)")
    for word in used:
        if word in expected:
            expected.remove(word)
        else:
            problems.append(f"{word} is not an unused boundary word")
    if expected and len(used) == len(vertex.boundary_words):
        problems.append(f"boundary word(s) {', '.join(map(str, expected))} not used")
    return CheckResult.of(f"boundary bijection at {vertex.id}", GRAPH_CLAUSE, not problems, "; ".join(problems))


def _check_bipartism(g: GraphOfGroupsWithSurfaces) -> CheckResult:
    bad = []
    for edge in g.edges:
        kinds = {isinstance(g.vertex(v), SurfaceVertex) for v in edge.endpoints if v in {x.id for x in g.vertices}}
        if kinds != {True, False}:
            bad.append(edge.id)
    detail = f"edge(s) {', '.join(bad)} do not join a surface vertex to a plain vertex" if bad else ""
    return CheckResult.of("bipartism", BIPARTISM_CLAUSE, not bad, detail)


def _check_nontrivial(g: GraphOfGroupsWithSurfaces) -> CheckResult:
    ok = bool(g.edges) and bool(g.surface_vertices)
    return CheckResult.of("non-triviality", NONTRIVIAL_CLAUSE, ok, "" if ok else "no edge or no surface vertex")


def validate_structure(g: GraphOfGroupsWithSurfaces) -> StructureReport:
    """Run every structural check; failures are report entries, never exceptions."""
    checks = [_check_alphabets(g), *_check_edges(g)]
    checks.append(_check_connectivity(g, g.graph()))
    checks.append(_check_spanning_tree(g))
    checks.append(_check_stable_letters(g))
    checks.extend(_check_boundary(g, vertex) for vertex in g.surface_vertices)
    report = StructureReport(checks, [_check_bipartism(g), _check_nontrivial(g)])
    logger.debug("Structure report for %r: %s", g, [str(check) for check in report.all_checks])
    return report


def induced_presentation(g: GraphOfGroupsWithSurfaces) -> Presentation:
    """The presentation of the fundamental group.

    Generators are the vertex generators in vertex order followed by the stable letters. Relators are the vertex
    relators, then ``w1 w2^-1`` for each tree edge and ``t w1 t^-1 w2^-1`` for each other edge, in edge order.

    Raises
    ------
    InvalidStructureError
        If a structural check fails.
    """
    report = validate_structure(g)
    if not report.valid:
        raise InvalidStructureError(report)
    alphabet = Alphabet([name for vertex in g.vertices for name in vertex.alphabet] + list(g.stable_letters))
    relators: list[Word] = [
        relator.representative.over(alphabet) for vertex in g.vertices for relator in vertex.presentation.relators
    ]
    for edge in g.edges:
        first, second = (word.over(alphabet) for word in edge.embeddings)
        if edge.tree:
            relators.append(first * ~second)
        else:
            stable = Word.generator(alphabet, edge.stable_letter)  # type: ignore[arg-type]
            relators.append(stable * first * ~stable * ~second)
    return Presentation(alphabet, relators)


def plain_vertex_presentation(g: GraphOfGroupsWithSurfaces) -> Presentation:
    """The free product presentation of the plain vertex groups."""
    alphabet = Alphabet(name for vertex in g.plain_vertices for name in vertex.alphabet)
    relators = [relator.over(alphabet) for vertex in g.plain_vertices for relator in vertex.presentation.relators]
    return Presentation(alphabet, relators)


def plain_vertex_free_product(g: GraphOfGroupsWithSurfaces, step_limit: int = 10000) -> GroupModel:
    """The model of the free product of the plain vertex groups.

    Raises
    ------
    UnsupportedModelError
        If a plain vertex presentation fits no supported model.
    """
    if not g.plain_vertices:
        return FreeModel(())
    return classify(plain_vertex_presentation(g), step_limit)
