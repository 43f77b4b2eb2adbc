# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Verification of hyperbolic floors and towers."""
from __future__ import annotations

import logging
import random
from collections.abc import Callable

from hyptower import Config
from hyptower.checks import CheckResult, CheckStatus
from hyptower.errors import MalformedCandidateError, UnsupportedModelError
from hyptower.gog import (
    induced_presentation,
    plain_vertex_presentation,
    validate_structure,
)
from hyptower.groups import (
    AbelianInvariants,
    FreeModel,
    GroupModel,
    InfiniteCyclicModel,
    abelian_invariants,
    model_for,
)
from hyptower.homs import (
    GroupMap,
    adjoin_free_letter,
    homomorphism_failures,
    identity_failures,
    nonabelian_image,
    sample_retraction,
)
from hyptower.surfaces import is_floor_admissible, standard_presentation
from hyptower.words import Word

from .candidates import BaseWitness, FloorCandidate, TowerCandidate
from .report import Verdict, VerificationReport


__all__ = ("verify_floor", "verify_tower", "step_limit_from_config", "sample_length_from_config")

logger = logging.getLogger("hyptower.towers")

ADMISSIBLE = "surfaces are once-punctured tori or have Euler characteristic at most -2"
RETRACTION = "r is a retraction onto G'"
NONABELIAN = "r sends surface vertex groups to non-abelian images"
EXTENDED = "G' is cyclic and r' retracts G * Z onto G' * Z"
FLOORS = "every floor is a hyperbolic floor"
WITNESS = "H lies in a plain vertex group"
GROUND = "ground floor is H * F * S1 * ... * Sp with closed surfaces of Euler characteristic at most -2"


def step_limit_from_config() -> int:
    """The Dehn rewriting step limit from the ``[verification]`` config section."""
    return int(Config["verification"]["dehn_step_limit"])


def sample_length_from_config() -> int:
    """The maximum length of sampled retraction words from the ``[verification]`` config section."""
    return int(Config["verification"]["sample_word_length"])


def _attempt(check: Callable[[], str]) -> tuple[bool, str]:
    """Run a check returning a failure description, empty on success; an undecided word problem is a failure."""
    try:
        detail = check()
    except UnsupportedModelError as exc:
        return False, f"undecided: {exc.reason}"
    return not detail, detail


def _describe_relators(failures: tuple[tuple[Word, Word], ...]) -> str:
    return "; ".join(f"relator {relator} maps to non-trivial {image}" for relator, image in failures)


def _describe_identity(failures: tuple[tuple[str, Word], ...]) -> str:
    return "; ".join(f"{name} maps back to {value}" for name, value in failures)


def _retraction_checks(r: GroupMap, inclusion: GroupMap, prefix: str = "") -> list[CheckResult]:
    clause = EXTENDED if prefix else RETRACTION
    checks = []
    for label, m in (("r", r), ("inclusion", inclusion)):
        ok, detail = _attempt(lambda m=m: _describe_relators(homomorphism_failures(m)))
        checks.append(CheckResult.of(f"{prefix}{label} is a homomorphism", clause, ok, detail))
    ok, detail = _attempt(lambda: _describe_identity(identity_failures(r, inclusion)))
    checks.append(CheckResult.of(f"{prefix}r restricts to the identity on G'", clause, ok, detail))
    return checks


def _nonabelian_checks(candidate: FloorCandidate, r: GroupMap, prefix: str = "") -> list[CheckResult]:
    clause = EXTENDED if prefix else NONABELIAN
    checks = []
    for vertex in candidate.decomposition.surface_vertices:
        generators = [Word.generator(r.source.alphabet, name) for name in vertex.alphabet]

        def describe(generators=generators) -> str:
            if nonabelian_image(r, generators):
                return ""
            images = ", ".join(str(r(word)) for word in generators)
            return f"images {images} generate an abelian subgroup"

        ok, detail = _attempt(describe)
        checks.append(CheckResult.of(f"{prefix}non-abelian image of {vertex.id}", clause, ok, detail))
    return checks


def _is_infinite_cyclic(model: GroupModel) -> bool:
    return isinstance(model, InfiniteCyclicModel) or (isinstance(model, FreeModel) and model.rank == 1)


def _extended_checks(candidate: FloorCandidate, inclusion: GroupMap) -> list[CheckResult]:
    target = candidate.retraction.target
    cyclic = _is_infinite_cyclic(target)
    if cyclic:
        detail = ""
    elif not target.alphabet:
        detail = "trivial G' is not supported"
    else:
        detail = f"G' is a {target.kind} group"
    checks = [CheckResult.of("G' is infinite cyclic", EXTENDED, cyclic, detail)]
    extension = candidate.extension
    checks.append(
        CheckResult.of("extension data present", EXTENDED, extension is not None, "" if extension else "no r' given")
    )
    if not cyclic or extension is None:
        return checks
    letter, extended = extension
    source = adjoin_free_letter(candidate.source, letter)
    target_presentation = adjoin_free_letter(target, letter).presentation
    if extended.source != source:
        raise MalformedCandidateError(f"r' source {extended.source} is not G * <{letter}> = {source}")
    if extended.target.presentation != target_presentation:
        raise MalformedCandidateError(
            f"r' target {extended.target.presentation} is not G' * <{letter}> = {target_presentation}"
        )
    fixed = extended.image(letter) == Word.generator(extended.target.alphabet, letter)
    checks.append(
        CheckResult.of(
            f"r'({letter}) = {letter}", EXTENDED, fixed, "" if fixed else f"r'({letter}) = {extended.image(letter)}"
        )
    )
    checks.extend(_retraction_checks(extended, inclusion.extended(letter), prefix="extended: "))
    checks.extend(_nonabelian_checks(candidate, extended, prefix="extended: "))
    return checks


def _supersede(check: CheckResult) -> CheckResult:
    if not check.failed:
        return check
    return CheckResult(check.name, check.clause, CheckStatus.INFO, f"{check.detail}; superseded by the extended branch")


def verify_floor(candidate: FloorCandidate, *, samples: int = 0, seed: int | None = None) -> VerificationReport:
    """Check every clause of the (extended) hyperbolic floor definition.

    Checks run in order: structure, admissibility of each surface vertex, bipartism, non-triviality, the retraction
    and the non-abelian images. A structural failure stops before the group theoretic checks. When only the
    non-abelian image checks fail, the extended branch is tried and, if it passes, those failures are kept as
    information.

    Parameters
    ----------
    candidate : FloorCandidate
        The floor to verify.
    samples : int
        Random words checked against ``r . i = id`` when positive.
    seed : int | None
        Seed for the random words.

    Raises
    ------
    MalformedCandidateError
        If the retraction or inclusion does not match the decomposition.
    """
    decomposition = candidate.decomposition
    structure = validate_structure(decomposition)
    checks = list(structure.checks)
    for vertex in decomposition.surface_vertices:
        surface = vertex.surface
        ok = not surface.is_closed and is_floor_admissible(surface)
        detail = "" if ok else f"{surface.name} has Euler characteristic {surface.euler_char}"
        checks.append(CheckResult.of(f"admissible surface at {vertex.id}", ADMISSIBLE, ok, detail))
    checks.extend(structure.floor_checks)
    if not structure.valid:
        logger.info("Floor %s is structurally invalid", candidate.name)
        return VerificationReport(candidate.name, Verdict.NOT_A_FLOOR, checks)

    presentation = induced_presentation(decomposition)
    subgroup = plain_vertex_presentation(decomposition)
    r = candidate.retraction
    if r.source != presentation:
        raise MalformedCandidateError(f"retraction source {r.source} is not the induced presentation {presentation}")
    if r.target.presentation != subgroup:
        raise MalformedCandidateError(
            f"retraction target {r.target.presentation} is not the plain vertex free product {subgroup}"
        )
    model = model_for(presentation, step_limit_from_config())
    inclusion = candidate.inclusion or GroupMap.identity_inclusion(subgroup, model)
    if inclusion.source != subgroup or inclusion.target.presentation != presentation:
        raise MalformedCandidateError("the inclusion must map G' into G")

    checks.extend(_retraction_checks(r, inclusion))
    nonabelian = _nonabelian_checks(candidate, r)
    checks.extend(nonabelian)
    extended = False
    failed = [check for check in checks if check.failed]
    if not failed:
        verdict = Verdict.HYPERBOLIC_FLOOR
    elif all(check in nonabelian for check in failed):
        extension_checks = _extended_checks(candidate, inclusion)
        if any(check.failed for check in extension_checks):
            checks.extend(extension_checks)
            verdict = Verdict.NOT_A_FLOOR
        else:
            checks = [_supersede(check) for check in checks] + extension_checks
            verdict = Verdict.EXTENDED_HYPERBOLIC_FLOOR
            extended = True
    else:
        verdict = Verdict.NOT_A_FLOOR

    if samples > 0 and verdict.accepting:
        rng = random.Random(seed)
        bad = sample_retraction(r, inclusion, samples, sample_length_from_config(), rng)
        detail = f"{samples} random word(s) checked" if not bad else f"r . i moves {', '.join(map(str, bad[:3]))}"
        checks.append(CheckResult.of("sampled r . i = id", RETRACTION, not bad, detail))
        if bad:
            verdict = Verdict.NOT_A_FLOOR

    logger.info("Floor %s: %s%s", candidate.name, verdict.value, " (extended branch)" if extended else "")
    return VerificationReport(candidate.name, verdict, checks)


def _witness_check(index: int, floor: FloorCandidate, witness: BaseWitness, tower: TowerCandidate) -> CheckResult:
    name = f"floor {index}: H inside {witness.vertex}"
    subgroup = tower.ground.subgroup
    decomposition = floor.decomposition
    plain = {vertex.id: vertex for vertex in decomposition.plain_vertices}
    if witness.vertex not in plain:
        return CheckResult.of(name, WITNESS, False, f"{witness.vertex} is not a plain vertex")
    generators = subgroup.generators if subgroup is not None else ()
    if len(witness.words) != len(generators):
        return CheckResult.of(name, WITNESS, False, f"{len(witness.words)} word(s) for {len(generators)} generator(s)")
    vertex_alphabet = plain[witness.vertex].alphabet
    group = floor.source
    model: GroupModel | None = None
    problems = []
    for word, generator in zip(witness.words, generators):
        if not word.letters <= set(vertex_alphabet):
            problems.append(f"{word} is not in {witness.vertex}")
            continue
        if generator not in group.alphabet:
            problems.append(f"H generator {generator} is not a generator of G^{index}")
            continue
        if floor.inclusion is not None:
            pushed = floor.inclusion(word.over(floor.inclusion.source.alphabet))
        else:
            pushed = word.over(group.alphabet)
        expected = Word.generator(group.alphabet, generator)
        if pushed.over(group.alphabet) == expected:
            continue
        model = model or model_for(group, step_limit_from_config())
        ok, detail = _attempt(lambda: "" if model.are_equal(pushed, expected) else f"{word} != {generator}")
        if not ok:
            problems.append(detail)
    return CheckResult.of(name, WITNESS, not problems, "; ".join(problems))


def _ground_checks(tower: TowerCandidate) -> list[CheckResult]:
    ground = tower.ground
    last = tower.last_group
    checks = []
    bad = [s.name for s in ground.surfaces if not s.is_closed or s.euler_char > -2]
    checks.append(
        CheckResult.of(
            "ground surfaces closed with Euler characteristic at most -2",
            GROUND,
            not bad,
            f"rejected: {', '.join(bad)}" if bad else "",
        )
    )
    checks.append(
        CheckResult.of("free rank non-negative", GROUND, ground.free_rank >= 0, f"free rank {ground.free_rank}")
    )
    invariants = [AbelianInvariants(ground.free_rank)]
    if ground.subgroup is not None:
        missing = [name for name in ground.subgroup.generators if name not in last.alphabet]
        checks.append(
            CheckResult.of(
                "H generators lie in the last group",
                GROUND,
                not missing,
                f"{', '.join(missing)} not in {last}" if missing else "",
            )
        )
        if not missing and ground.subgroup.relators:
            model = model_for(last, step_limit_from_config())
            ok, detail = _attempt(
                lambda: "; ".join(
                    f"relator {relator} of H fails"
                    for relator in ground.subgroup.relators  # type: ignore[union-attr]
                    if not model.is_trivial(relator.representative.over(last.alphabet))
                )
            )
            checks.append(CheckResult.of("H relators hold in the last group", GROUND, ok, detail))
        invariants.append(abelian_invariants(ground.subgroup))
    invariants.extend(
        abelian_invariants(standard_presentation(s).presentation) for s in ground.surfaces if s.euler_char < 2
    )
    expected = AbelianInvariants.total(invariants)
    actual = abelian_invariants(last)
    checks.append(
        CheckResult.of(
            "abelianization of the last group matches H * F * S1 * ... * Sp",
            GROUND,
            actual == expected,
            f"last group {actual}, ground floor {expected}",
        )
    )
    return checks


def verify_tower(candidate: TowerCandidate, *, samples: int = 0, seed: int | None = None) -> VerificationReport:
    """Check every floor, the base subgroup witnesses and the ground floor shape.

    Raises
    ------
    MalformedCandidateError
        If the floors do not compose or the witnesses do not match the floors.
    """
    floors = candidate.floors
    if len(candidate.witnesses) != len(floors):
        raise MalformedCandidateError(f"{len(candidate.witnesses)} witness(es) for {len(floors)} floor(s)")
    if floors and floors[0].source != candidate.group:
        raise MalformedCandidateError(f"the first floor starts at {floors[0].source}, not at {candidate.group}")
    for index, (upper, lower) in enumerate(zip(floors, floors[1:])):
        if upper.target != lower.source:
            raise MalformedCandidateError(
                f"floor {index} ends at {upper.target} but floor {index + 1} starts at {lower.source}"
            )

    checks: list[CheckResult] = []
    extended_last = False
    for index, (floor, witness) in enumerate(zip(floors, candidate.witnesses)):
        report = verify_floor(floor, samples=samples, seed=seed)
        checks.extend(
            CheckResult(f"floor {index}: {check.name}", check.clause, check.status, check.detail)
            for check in report.checks
        )
        checks.append(CheckResult.of(f"floor {index} verdict", FLOORS, report.accepted, report.verdict.value))
        if report.verdict is Verdict.EXTENDED_HYPERBOLIC_FLOOR:
            if index == len(floors) - 1:
                extended_last = True
            else:
                checks.append(
                    CheckResult.of(
                        f"floor {index} not extended", FLOORS, False, "only the last floor may be an extended floor"
                    )
                )
        checks.append(_witness_check(index, floor, witness, candidate))
    checks.extend(_ground_checks(candidate))

    subgroup = candidate.ground.subgroup
    if any(check.failed for check in checks):
        verdict = Verdict.NOT_A_TOWER
    elif extended_last:
        verdict = Verdict.EXTENDED_HYPERBOLIC_TOWER
    elif subgroup is None or not subgroup.generators:
        verdict = Verdict.TOWER_OVER_TRIVIAL
    else:
        verdict = Verdict.HYPERBOLIC_TOWER
    logger.info("Tower %s: %s", candidate.name, verdict.value)
    return VerificationReport(candidate.name, verdict, checks)
