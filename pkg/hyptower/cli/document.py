# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Input documents declaring presentations, decompositions, floors and towers.

Documents are TOML, or JSON with the same structure::

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

    [towers.s4]
    floors = ["moebius"]
    witnesses = [{ vertex = "H", words = ["h"] }]
    ground = { subgroup = "cyclic", free_rank = 0, surfaces = [] }

A plain vertex either names a presentation or lists its own generators and relators. Maps are ``map { ... }``
literals or tables of strings. A tower without floors must name its ``group``.
"""
from __future__ import annotations

import re
import sys
from collections.abc import Callable, Mapping
from typing import Any, Literal, TypeVar

import orjson
import toml

from hyptower.catalog.builders import floor as build_floor
from hyptower.errors import DocumentParseError, InvalidStructureError, UnsupportedModelError
from hyptower.gog import EdgeData, GraphOfGroupsWithSurfaces, PlainVertex, SurfaceVertex, VertexData
from hyptower.groups import Presentation
from hyptower.surfaces import SurfaceDatum, standard_presentation
from hyptower.towers import BaseWitness, FloorCandidate, GroundFloor, TowerCandidate
from hyptower.words import GENERATOR_NAME, Word, parse_word

from .literals import format_embedding, normalize_word, parse_embedding, parse_map


if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib  # type: ignore  # pragma: no cover

__all__ = ("SECTIONS", "InputDocument", "parse", "dumps")

SECTIONS = ("presentations", "decompositions", "floors", "towers")
DocumentFormat = Literal["toml", "json"]
T = TypeVar("T")

_TOML_POSITION = re.compile(r"\s*\(at line (?P<line>\d+), column (?P<column>\d+)\)\s*$")


def _expect(value: Any, kind: type | tuple[type, ...], where: str) -> Any:
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        names = kind.__name__ if isinstance(kind, type) else " or ".join(k.__name__ for k in kind)
        raise DocumentParseError(f"{where} must be a {names}, got {value!r}")
    return value


def _strings(value: Any, where: str) -> list[str]:
    return [_expect(item, str, f"item of {where}") for item in _expect(value, list, where)]


def _names(value: Any, where: str) -> list[str]:
    names = _strings(value, where)
    for name in names:
        if not GENERATOR_NAME.fullmatch(name):
            raise DocumentParseError(f"{name!r} in {where} is not a generator name")
    return names


def _unknown_keys(table: Mapping[str, Any], allowed: set[str], where: str) -> None:
    extra = sorted(set(table) - allowed)
    if extra:
        raise DocumentParseError(f"unknown key(s) {', '.join(extra)} in {where}")


def _normalize_presentation(table: Any, where: str) -> dict[str, Any]:
    table = _expect(table, dict, where)
    _unknown_keys(table, {"generators", "relators"}, where)
    return {
        "generators": _names(table.get("generators", []), f"{where}.generators"),
        "relators": [normalize_word(text) for text in _strings(table.get("relators", []), f"{where}.relators")],
    }


def _normalize_vertex(table: Any, where: str) -> dict[str, Any]:
    table = _expect(table, dict, where)
    vertex: dict[str, Any] = {"id": _expect(table.get("id"), str, f"{where}.id")}
    if "surface" in table:
        _unknown_keys(table, {"id", "surface", "names"}, where)
        vertex["surface"] = SurfaceDatum.parse(_expect(table["surface"], str, f"{where}.surface")).literal()
        if "names" in table:
            vertex["names"] = _names(table["names"], f"{where}.names")
    elif "presentation" in table:
        _unknown_keys(table, {"id", "presentation"}, where)
        vertex["presentation"] = _expect(table["presentation"], str, f"{where}.presentation")
    else:
        _unknown_keys(table, {"id", "generators", "relators"}, where)
        vertex.update(_normalize_presentation({k: v for k, v in table.items() if k != "id"}, where))
    return vertex


def _normalize_edge(table: Any, where: str) -> dict[str, Any]:
    table = _expect(table, dict, where)
    _unknown_keys(table, {"id", "embedding_at", "tree", "stable_letter"}, where)
    edge_id = _expect(table.get("id"), str, f"{where}.id")
    ends = _strings(table.get("embedding_at", []), f"{where}.embedding_at")
    if len(ends) != 2:
        raise DocumentParseError(f"{where}.embedding_at needs exactly two 'vertex: word' entries")
    edge: dict[str, Any] = {
        "id": edge_id,
        "embedding_at": [format_embedding(*parse_embedding(end, where)) for end in ends],
    }
    letter = table.get("stable_letter")
    edge["tree"] = _expect(table.get("tree", letter is None), bool, f"{where}.tree")
    if letter is not None:
        edge["stable_letter"] = _expect(letter, str, f"{where}.stable_letter")
    return edge


def _normalize_decomposition(table: Any, where: str) -> dict[str, Any]:
    table = _expect(table, dict, where)
    _unknown_keys(table, {"vertices", "edges"}, where)
    vertices = _expect(table.get("vertices", []), list, f"{where}.vertices")
    edges = _expect(table.get("edges", []), list, f"{where}.edges")
    return {
        "vertices": [_normalize_vertex(v, f"{where}.vertices[{i}]") for i, v in enumerate(vertices)],
        "edges": [_normalize_edge(e, f"{where}.edges[{i}]") for i, e in enumerate(edges)],
    }


def _normalize_floor(table: Any, where: str) -> dict[str, Any]:
    table = _expect(table, dict, where)
    _unknown_keys(table, {"decomposition", "retraction", "inclusion", "extension"}, where)
    normalized: dict[str, Any] = {
        "decomposition": _expect(table.get("decomposition"), str, f"{where}.decomposition"),
        "retraction": parse_map(_expect(table.get("retraction"), (str, dict), f"{where}.retraction"), where),
    }
    if "inclusion" in table:
        normalized["inclusion"] = parse_map(_expect(table["inclusion"], (str, dict), f"{where}.inclusion"), where)
    if "extension" in table:
        extension = _expect(table["extension"], dict, f"{where}.extension")
        _unknown_keys(extension, {"letter", "retraction"}, f"{where}.extension")
        letter = _expect(extension.get("letter", "x"), str, f"{where}.extension.letter")
        retraction = _expect(extension.get("retraction"), (str, dict), f"{where}.extension.retraction")
        normalized["extension"] = {"letter": letter, "retraction": parse_map(retraction, f"{where}.extension")}
    return normalized


def _normalize_tower(table: Any, where: str) -> dict[str, Any]:
    table = _expect(table, dict, where)
    _unknown_keys(table, {"group", "floors", "witnesses", "ground"}, where)
    normalized: dict[str, Any] = {}
    if "group" in table:
        normalized["group"] = _expect(table["group"], str, f"{where}.group")
    normalized["floors"] = _strings(table.get("floors", []), f"{where}.floors")
    if not normalized["floors"] and "group" not in normalized:
        raise DocumentParseError(f"{where} has no floors, so it must name its group")
    witnesses = []
    for index, item in enumerate(_expect(table.get("witnesses", []), list, f"{where}.witnesses")):
        item = _expect(item, dict, f"{where}.witnesses[{index}]")
        _unknown_keys(item, {"vertex", "words"}, f"{where}.witnesses[{index}]")
        witnesses.append(
            {
                "vertex": _expect(item.get("vertex"), str, f"{where}.witnesses[{index}].vertex"),
                "words": [normalize_word(w) for w in _strings(item.get("words", []), f"{where}.witnesses[{index}]")],
            }
        )
    normalized["witnesses"] = witnesses
    ground = _expect(table.get("ground", {}), dict, f"{where}.ground")
    _unknown_keys(ground, {"subgroup", "free_rank", "surfaces"}, f"{where}.ground")
    normalized_ground: dict[str, Any] = {}
    if "subgroup" in ground:
        normalized_ground["subgroup"] = _expect(ground["subgroup"], str, f"{where}.ground.subgroup")
    normalized_ground["free_rank"] = _expect(ground.get("free_rank", 0), int, f"{where}.ground.free_rank")
    normalized_ground["surfaces"] = [
        SurfaceDatum.parse(text).literal() for text in _strings(ground.get("surfaces", []), f"{where}.ground.surfaces")
    ]
    normalized["ground"] = normalized_ground
    return normalized


_NORMALIZERS = {
    "presentations": _normalize_presentation,
    "decompositions": _normalize_decomposition,
    "floors": _normalize_floor,
    "towers": _normalize_tower,
}


class InputDocument:
    """Named declarations, normalized so that printing and parsing again gives an equal document.

    Parameters
    ----------
    data : Mapping[str, Any]
        The decoded document, sections as in `SECTIONS`.
    source : str | None
        The text it was decoded from, used to report line numbers.

    Raises
    ------
    DocumentParseError
        On unknown sections, malformed declarations or references that do not resolve.

    Notes
    -----
    Names are unique within a section and references are typed by section, so a floor may share the name of its
    decomposition. TOML refuses a repeated table itself; JSON objects keep their last key.
    """

    __slots__ = ("_data", "_source", "_decompositions")

    def __init__(self, data: Mapping[str, Any], source: str | None = None):
        self._source = source
        self._decompositions: dict[str, GraphOfGroupsWithSurfaces] = {}
        _expect(data, dict, "document")
        _unknown_keys(data, set(SECTIONS), "document")
        normalized: dict[str, dict[str, Any]] = {}
        for section in SECTIONS:
            entries = _expect(data.get(section, {}), dict, section)
            normalized[section] = {}
            for name, table in entries.items():
                try:
                    normalized[section][name] = _NORMALIZERS[section](table, f"{section}.{name}")
                except ValueError as exc:
                    raise self._error(str(exc), section, name) from None
        self._data = normalized
        self._check_references()
        for name in normalized["presentations"]:
            self._build("presentations", name, self.presentation)
        for name in normalized["decompositions"]:
            self._build("decompositions", name, self.decomposition)

    def _line(self, *path: str) -> int | None:
        if self._source is None or not path:
            return None
        lines = self._source.splitlines()
        start, found = 0, None
        for key in path:
            pattern = re.compile(rf"(^|[\s.\"'\[{{,]){re.escape(key)}($|[\s.\"'\]=:}},])")
            for index in range(start, len(lines)):
                if pattern.search(lines[index]):
                    start = found = index
                    break
        return None if found is None else found + 1

    def _error(self, message: str, *path: str) -> DocumentParseError:
        return DocumentParseError(message, self._line(*path))

    def _build(self, section: str, name: str, build: Callable[[str], T]) -> T:
        try:
            return build(name)
        except (DocumentParseError, InvalidStructureError, UnsupportedModelError):
            raise
        except (ValueError, KeyError) as exc:
            raise self._error(f"{section}.{name}: {exc}", section, name) from exc

    def _check_references(self) -> None:
        data = self._data
        for name, table in data["decompositions"].items():
            for vertex in table["vertices"]:
                if "presentation" in vertex and vertex["presentation"] not in data["presentations"]:
                    raise self._error(
                        f"decompositions.{name}: unknown presentation {vertex['presentation']!r}",
                        "decompositions",
                        name,
                    )
        for name, table in data["floors"].items():
            if table["decomposition"] not in data["decompositions"]:
                raise self._error(
                    f"floors.{name}: unknown decomposition {table['decomposition']!r}", "floors", name
                )
        for name, table in data["towers"].items():
            for floor_name in table["floors"]:
                if floor_name not in data["floors"]:
                    raise self._error(f"towers.{name}: unknown floor {floor_name!r}", "towers", name)
            if len(table["witnesses"]) != len(table["floors"]):
                raise self._error(
                    f"towers.{name}: {len(table['witnesses'])} witness(es) for {len(table['floors'])} floor(s)",
                    "towers",
                    name,
                )
            for key in ("group", "subgroup"):
                reference = table.get(key) if key == "group" else table["ground"].get(key)
                if reference is not None and reference not in data["presentations"]:
                    raise self._error(f"towers.{name}: unknown presentation {reference!r}", "towers", name)

    @property
    def data(self) -> dict[str, dict[str, Any]]:
        """The normalized declarations."""
        return self._data

    @property
    def floors(self) -> tuple[str, ...]:
        """Declared floor names, sorted."""
        return tuple(sorted(self._data["floors"]))

    @property
    def towers(self) -> tuple[str, ...]:
        """Declared tower names, sorted."""
        return tuple(sorted(self._data["towers"]))

    def presentation(self, name: str) -> Presentation:
        """Build a declared presentation."""
        table = self._data["presentations"][name]
        return Presentation.parse(table["generators"], table["relators"])

    def _vertex(self, table: dict[str, Any]) -> VertexData:
        if "surface" in table:
            datum = SurfaceDatum.parse(table["surface"])
            presentation = standard_presentation(datum)
            if "names" in table:
                presentation = presentation.rename_positionally(table["names"])
            return SurfaceVertex(table["id"], datum, presentation)
        if "presentation" in table:
            return PlainVertex(table["id"], self.presentation(table["presentation"]))
        return PlainVertex(table["id"], Presentation.parse(table["generators"], table["relators"]))

    def decomposition(self, name: str) -> GraphOfGroupsWithSurfaces:
        """Build a declared graph of groups with surfaces."""
        if name in self._decompositions:
            return self._decompositions[name]
        table = self._data["decompositions"][name]
        vertices = [self._vertex(vertex) for vertex in table["vertices"]]
        alphabets = {vertex.id: vertex.alphabet for vertex in vertices}
        edges = []
        for edge in table["edges"]:
            ends = [parse_embedding(end) for end in edge["embedding_at"]]
            words = tuple(parse_word(word, alphabets.get(vertex)) for vertex, word in ends)
            edges.append(
                EdgeData(
                    edge["id"],
                    (ends[0][0], ends[1][0]),
                    words,  # type: ignore[arg-type]
                    tree=edge["tree"],
                    stable_letter=edge.get("stable_letter"),
                )
            )
        self._decompositions[name] = decomposition = GraphOfGroupsWithSurfaces(vertices, edges)
        return decomposition

    def floor(self, name: str) -> FloorCandidate:
        """Build a declared floor candidate.

        Raises
        ------
        InvalidStructureError
            If the decomposition is structurally invalid, so no retraction can be attached to it.
        DocumentParseError
            If a map does not fit the groups.
        """
        table = self._data["floors"][name]

        def build(floor_name: str) -> FloorCandidate:
            decomposition = self.decomposition(table["decomposition"])
            extension = table.get("extension")
            return build_floor(
                floor_name,
                decomposition.vertices,
                decomposition.edges,
                table["retraction"],
                extension=extension["retraction"] if extension else None,
                letter=extension["letter"] if extension else "x",
                inclusion=table.get("inclusion"),
            )

        return self._build("floors", name, build)

    def tower(self, name: str) -> TowerCandidate:
        """Build a declared tower candidate."""
        table = self._data["towers"][name]

        def build(tower_name: str) -> TowerCandidate:
            floors = [self.floor(floor_name) for floor_name in table["floors"]]
            group = self.presentation(table["group"]) if "group" in table else floors[0].source
            witnesses = []
            for floor, witness in zip(floors, table["witnesses"]):
                vertex = next((v for v in floor.decomposition.plain_vertices if v.id == witness["vertex"]), None)
                alphabet = vertex.alphabet if vertex is not None else None
                words: tuple[Word, ...] = tuple(parse_word(word, alphabet) for word in witness["words"])
                witnesses.append(BaseWitness(witness["vertex"], words))
            ground = table["ground"]
            subgroup = self.presentation(ground["subgroup"]) if "subgroup" in ground else None
            surfaces = tuple(SurfaceDatum.parse(text) for text in ground["surfaces"])
            ground_floor = GroundFloor(subgroup, ground["free_rank"], surfaces)
            return TowerCandidate(group, floors, witnesses, ground_floor, tower_name)

        return self._build("towers", name, build)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InputDocument):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(orjson.dumps(self._data, option=orjson.OPT_SORT_KEYS))

    def __repr__(self) -> str:
        counts = " ".join(f"{section}={len(self._data[section])}" for section in SECTIONS)
        return f"<InputDocument {counts}>"


def _detect(text: str) -> DocumentFormat:
    return "json" if text.lstrip().startswith("{") else "toml"


def parse(text: str, fmt: DocumentFormat | None = None) -> InputDocument:
    """Decode and check a document.

    Parameters
    ----------
    text : str
        TOML or JSON text.
    fmt : "toml" | "json" | None
        The format; detected from the first character when None.

    Raises
    ------
    DocumentParseError
        With the line and column of syntax errors, and the line of the declaration for semantic errors.
    """
    fmt = fmt or _detect(text)
    if fmt == "json":
        try:
            data = orjson.loads(text)
        except orjson.JSONDecodeError as exc:
            raise DocumentParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    else:
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            message = str(exc)
            match = _TOML_POSITION.search(message)
            if match is None:
                raise DocumentParseError(f"invalid TOML: {message}") from None
            raise DocumentParseError(
                f"invalid TOML: {message[: match.start()]}", int(match["line"]), int(match["column"])
            ) from None
    return InputDocument(data, text)


def dumps(document: InputDocument, fmt: DocumentFormat = "toml") -> str:
    """Print a document so that `parse` gives it back."""
    data = {section: entries for section, entries in document.data.items() if entries}
    if fmt == "json":
        return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode() + "\n"
    return toml.dumps(data)
