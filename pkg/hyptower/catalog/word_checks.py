# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Catalog entries certified by word-level computations rather than by a floor or tower."""
from __future__ import annotations

import logging
import random
from collections.abc import Callable, Iterable, Sequence
from typing import Optional

from sympy import Matrix

from hyptower.checks import CheckResult
from hyptower.groups import FreeModel, Presentation
from hyptower.homs import GroupMap, verify_homomorphism
from hyptower.surfaces import (
    FloorProfile,
    RejectionReason,
    SurfaceDatum,
    enumerate_floor_profiles,
    enumerate_subsurfaces,
)
from hyptower.towers import Verdict, VerificationReport
from hyptower.whitehead import is_basis, is_primitive, whitehead_generators
from hyptower.words import Alphabet, CyclicWord, Word, commutator, is_genus_one_commutator, parse_word

from .s4 import N4


__all__ = (
    "WordCheckSuite",
    "commutator_conjugacy",
    "basis_checks",
    "punctured_klein_obstruction",
    "s4_profiles",
    "zs_profiles",
)

logger = logging.getLogger("hyptower.catalog")

F2 = Alphabet(["a", "b"])
CYLINDER = SurfaceDatum(True, 0, 2)
PANTS = SurfaceDatum(True, -1, 3)
MOEBIUS = SurfaceDatum(False, 0, 1)
PUNCTURED_TORUS = SurfaceDatum(True, -1, 1)

CheckFactory = Callable[[int, Optional[int]], Iterable[CheckResult]]


class WordCheckSuite:
    """A named list of checks; certified when none fail.

    Parameters
    ----------
    name : str
        Used in reports.
    checks : Callable[[int, int | None], Iterable[CheckResult]]
        Called with the sample count and seed.
    """

    __slots__ = ("_name", "_checks")

    def __init__(self, name: str, checks: CheckFactory):
        self._name = name
        self._checks = checks

    @property
    def name(self) -> str:
        """The suite's name."""
        return self._name

    def verify(self, *, samples: int = 0, seed: int | None = None) -> VerificationReport:
        """Run every check."""
        checks = list(self._checks(samples, seed))
        verdict = Verdict.NOT_CERTIFIED if any(check.failed for check in checks) else Verdict.CERTIFIED
        logger.info("Word checks %s: %s", self._name, verdict.value)
        return VerificationReport(self._name, verdict, checks)

    def __repr__(self) -> str:
        return f"<WordCheckSuite name={self._name!r}>"


def _pair(first: str, second: str) -> tuple[Word, Word]:
    return parse_word(first, F2), parse_word(second, F2)


def _commutator_class(pair: Sequence[Word]) -> bool:
    """Whether ``[x, y]`` is conjugate to ``[a, b]`` or its inverse."""
    base = CyclicWord(commutator(*_pair("a", "b")))
    value = CyclicWord(commutator(*pair))
    return value in (base, base.inverse())


def _commutator_checks(samples: int, seed: int | None) -> Iterable[CheckResult]:
    clause = "[x, y] is conjugate to [a, b] or [b, a] exactly for bases x, y"
    for first, second in (("a", "b"), ("a b", "b"), ("a", "a b a"), ("a b^-1", "b"), ("b", "a")):
        pair = _pair(first, second)
        ok = is_basis(pair, F2) and _commutator_class(pair)
        yield CheckResult.of(f"basis ({first}, {second})", clause, ok, str(commutator(*pair)))
    for first, second in (("a", "b^2"), ("a b a^-1", "b"), ("a", "b a b a^-1 b^-1")):
        pair = _pair(first, second)
        ok = not is_basis(pair, F2) and not _commutator_class(pair)
        yield CheckResult.of(f"non-basis ({first}, {second})", clause, ok, str(commutator(*pair)))
    if samples <= 0:
        return
    rng = random.Random(seed)
    table = whitehead_generators(F2)
    bad = []
    for _ in range(samples):
        pair = _pair("a", "b")
        for automorphism in rng.choices(table, k=rng.randint(1, 6)):
            pair = (automorphism(pair[0]), automorphism(pair[1]))
        if not _commutator_class(pair):
            bad.append(f"({pair[0]}, {pair[1]})")
    detail = f"{samples} automorphic image(s) of (a, b)" if not bad else f"failed for {', '.join(bad[:3])}"
    yield CheckResult.of("sampled automorphisms", clause, not bad, detail)


def commutator_conjugacy() -> WordCheckSuite:
    """Automorphisms of ``F(a, b)`` send ``[a, b]`` to a conjugate of itself or of its inverse."""
    return WordCheckSuite("s2-commutator-conjugacy", _commutator_checks)


def _unimodular(words: Sequence[Word], alphabet: Alphabet) -> bool:
    return abs(Matrix([word.exponent_vector(alphabet.names) for word in words]).det()) == 1


def _basis_checks(samples: int, seed: int | None) -> Iterable[CheckResult]:
    clause = "Whitehead minimization and Stallings folding decide bases and primitive elements"
    f3 = Alphabet(["a", "ap", "z"])
    cases = (
        (F2, ("a", "a b a"), True),
        (F2, ("a b", "b"), True),
        (F2, ("a", "b a b a^-1 b^-1"), False),
        (F2, ("a b a^-1", "b"), False),
        (f3, ("a", "z ap z^-1", "z"), True),
    )
    for alphabet, texts, expected in cases:
        words = [parse_word(text, alphabet) for text in texts]
        decided = is_basis(words, alphabet)
        detail = "basis" if decided else "not a basis"
        yield CheckResult.of(f"({', '.join(texts)})", clause, decided == expected, detail)
        if expected:
            label = f"({', '.join(texts)}) abelianizes to a unimodular matrix"
            yield CheckResult.of(label, clause, _unimodular(words, alphabet))
    for text, expected in (("a b", True), ("a b a b^-1", False), ("a^2 b^2", False)):
        decided = is_primitive(parse_word(text, F2), F2)
        detail = "primitive" if decided else "not primitive"
        yield CheckResult.of(f"{text} primitive", clause, decided == expected, detail)


def basis_checks() -> WordCheckSuite:
    """Bases and primitive elements of small free groups."""
    return WordCheckSuite("free-basis-checks", _basis_checks)


def _find(
    profiles: Sequence[FloorProfile], surfaces: Iterable[SurfaceDatum], complements: Iterable[SurfaceDatum]
) -> FloorProfile | None:
    key = (tuple(sorted(surfaces)), tuple(sorted(complements)))
    return next((p for p in profiles if (p.surface_pieces, p.complement_pieces) == key), None)


def _obstruction_checks(samples: int, seed: int | None) -> Iterable[CheckResult]:
    clause = "a once-punctured torus floor of four crosscaps would make d1^2 d2^2 a commutator"
    boundary = parse_word("d1^2 d2^2")
    witness = is_genus_one_commutator(boundary)
    yield CheckResult.of(
        "d1^2 d2^2 is not conjugate to a commutator", clause, witness is None, "" if witness is None else str(witness)
    )
    source = Presentation.parse(["a", "b", "d1", "d2"], ["a b a^-1 b^-1 = d1^2 d2^2"])
    candidate = GroupMap(source, FreeModel(["d1", "d2"]), {"a": "d1", "b": "d2", "d1": "d1", "d2": "d2"})
    yield CheckResult.of(
        "a -> d1, b -> d2 is not a homomorphism onto the punctured Klein bottle group",
        clause,
        not verify_homomorphism(candidate),
    )
    profile = _find(enumerate_floor_profiles(N4), [PUNCTURED_TORUS], [SurfaceDatum(False, -1, 1)])
    reason = profile.rejection.reason if profile is not None and profile.rejection is not None else None
    yield CheckResult.of(
        "the profile is rejected by the commutator obstruction",
        clause,
        reason is RejectionReason.COMMUTATOR_OBSTRUCTION,
        str(profile) if profile is not None else "profile not enumerated",
    )


def punctured_klein_obstruction() -> WordCheckSuite:
    """No floor of four crosscaps has a once-punctured torus over a punctured Klein bottle."""
    return WordCheckSuite("s4-punctured-klein-obstruction", _obstruction_checks)


def _s4_profile_checks(samples: int, seed: int | None) -> Iterable[CheckResult]:
    clause = "floor profiles of the surface with four crosscaps"
    profiles = enumerate_floor_profiles(N4)
    accepted = [profile for profile in profiles if profile.accepted]
    for label, surfaces, complements in (
        ("Möbius band", [SurfaceDatum(False, -2, 1)], [MOEBIUS]),
        ("annulus", [SurfaceDatum(False, -2, 2)], [CYLINDER]),
    ):
        profile = _find(profiles, surfaces, complements)
        ok = profile is not None and profile.accepted
        yield CheckResult.of(f"{label} complement accepted", clause, ok, str(profile) if profile else "missing")
    tori = [str(profile) for profile in accepted if PUNCTURED_TORUS in profile.surface_pieces]
    yield CheckResult.of("no accepted profile uses a once-punctured torus", clause, not tori, "; ".join(tori))
    shapes = [str(profile) for profile in accepted if len(profile.surface_pieces) != 1]
    yield CheckResult.of("accepted profiles have a single surface piece", clause, not shapes, "; ".join(shapes))
    yield CheckResult.of("profiles counted", clause, bool(accepted), f"{len(accepted)} of {len(profiles)} accepted")


def s4_profiles() -> WordCheckSuite:
    """Enumeration of the floor profiles of four crosscaps."""
    return WordCheckSuite("s4-profiles", _s4_profile_checks)


def _zs_profile_checks(samples: int, seed: int | None) -> Iterable[CheckResult]:
    clause = "proper subsurfaces of the surface pieces are annuli and pairs of pants"
    for ambient in (PUNCTURED_TORUS, SurfaceDatum(True, -2, 4)):
        found = enumerate_subsurfaces(ambient)
        yield CheckResult.of(
            f"subsurfaces of the {ambient.name}",
            clause,
            found == [CYLINDER, PANTS],
            ", ".join(piece.name for piece in found),
        )


def zs_profiles() -> WordCheckSuite:
    """Subsurfaces of the two surface pieces of ``<a, ap, b, bp, z | [a, b][ap, bp]>``."""
    return WordCheckSuite("zs-profiles", _zs_profile_checks)
