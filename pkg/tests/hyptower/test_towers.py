# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
# SPDX-License-Identifier: MIT
import logging

import pytest

from hyptower.catalog import free_products, s4
from hyptower.checks import CheckResult, CheckStatus
from hyptower.errors import MalformedCandidateError
from hyptower.gog import GraphOfGroupsWithSurfaces
from hyptower.groups import InfiniteCyclicModel, Presentation, model_for
from hyptower.homs import GroupMap
from hyptower.surfaces import SurfaceDatum
from hyptower.towers import (
    BaseWitness,
    Extension,
    FloorCandidate,
    GroundFloor,
    TowerCandidate,
    Verdict,
    VerificationReport,
    verify_floor,
    verify_tower,
)


def _statuses(report):
    return {check.name: check.status for check in report.checks}


def _without_extension(candidate):
    return FloorCandidate(candidate.decomposition, candidate.retraction, candidate.inclusion, None, candidate.name)


def test_hyperbolic_floor(caplog):
    """Test a floor whose retraction already has non-abelian image."""
    caplog.set_level(logging.INFO, logger="hyptower.towers")
    report = verify_floor(free_products.h1_floor())
    assert report.verdict is Verdict.HYPERBOLIC_FLOOR
    assert report.accepted
    assert not report.failures
    statuses = _statuses(report)
    assert statuses["r is a homomorphism"] is CheckStatus.PASS
    assert statuses["non-abelian image of Sigma"] is CheckStatus.PASS
    assert ("hyptower.towers", logging.INFO, "Floor zs-h1-floor: hyperbolic floor") in caplog.record_tuples


def test_wrong_retraction():
    """Test that a map sending a relator to a non-trivial word is rejected."""
    report = free_products.h1_wrong_retraction().verify()
    assert report.verdict is Verdict.NOT_A_FLOOR
    failures = {check.name: check.detail for check in report.failures}
    assert "maps to non-trivial" in failures["r is a homomorphism"]
    assert "extension data present" not in failures


def test_extended_floor():
    """Test that the Möbius floor is accepted through the extended branch only."""
    report = s4.moebius_floor().verify()
    assert report.verdict is Verdict.EXTENDED_HYPERBOLIC_FLOOR
    statuses = _statuses(report)
    assert statuses["non-abelian image of Sigma"] is CheckStatus.INFO
    assert statuses["G' is infinite cyclic"] is CheckStatus.PASS
    assert statuses["r'(x) = x"] is CheckStatus.PASS
    assert statuses["extended: non-abelian image of Sigma"] is CheckStatus.PASS
    superseded = next(check for check in report.checks if check.name == "non-abelian image of Sigma")
    assert superseded.detail.endswith("superseded by the extended branch")
    assert s4.klein_floor().verify().verdict is Verdict.EXTENDED_HYPERBOLIC_FLOOR


def test_unextended_floor():
    """Test that without r' the Möbius floor is not a floor."""
    report = verify_floor(_without_extension(s4.moebius_floor()))
    assert report.verdict is Verdict.NOT_A_FLOOR
    assert {check.name for check in report.failures} == {"non-abelian image of Sigma", "extension data present"}


def test_structurally_invalid_floor():
    """Test that structural failures stop before the group theoretic checks."""
    candidate = s4.moebius_floor()
    h, sigma = candidate.decomposition.vertices
    broken = FloorCandidate(GraphOfGroupsWithSurfaces([h, sigma]), candidate.retraction, name="broken")
    report = verify_floor(broken)
    assert report.verdict is Verdict.NOT_A_FLOOR
    assert "r is a homomorphism" not in _statuses(report)
    assert {"connectivity", "non-triviality"} <= {check.name for check in report.failures}


def test_malformed_floor():
    """Test that maps not matching the decomposition are refused."""
    candidate = s4.moebius_floor()
    wrong_source = FloorCandidate(
        candidate.decomposition, GroupMap(Presentation(["h"]), InfiniteCyclicModel("h"), {"h": "h"})
    )
    with pytest.raises(MalformedCandidateError):
        verify_floor(wrong_source)
    into_itself = GroupMap(
        candidate.source, model_for(candidate.source), {name: name for name in candidate.source.generators}
    )
    with pytest.raises(MalformedCandidateError):
        verify_floor(FloorCandidate(candidate.decomposition, candidate.retraction, into_itself))
    wrong_letter = FloorCandidate(
        candidate.decomposition,
        candidate.retraction,
        extension=Extension("y", candidate.extension.retraction),
    )
    with pytest.raises(MalformedCandidateError):
        verify_floor(wrong_letter)


def test_sampling():
    """Test that sampled words are recorded as a check."""
    report = s4.moebius_floor().verify(samples=20, seed=1)
    assert report.accepted
    sampled = report.checks[-1]
    assert sampled == CheckResult("sampled r . i = id", sampled.clause, CheckStatus.PASS, "20 random word(s) checked")
    assert "sampled r . i = id" not in _statuses(s4.moebius_floor().verify())


@pytest.mark.parametrize(
    "tower, verdict",
    [
        (s4.moebius_tower, Verdict.EXTENDED_HYPERBOLIC_TOWER),
        (s4.klein_tower, Verdict.EXTENDED_HYPERBOLIC_TOWER),
        (s4.trivial_tower, Verdict.TOWER_OVER_TRIVIAL),
        (free_products.trivial_tower, Verdict.TOWER_OVER_TRIVIAL),
        (free_products.h1_tower, Verdict.HYPERBOLIC_TOWER),
        (free_products.two_floor_tower, Verdict.HYPERBOLIC_TOWER),
    ],
)
def test_towers(tower, verdict):
    """Test tower verdicts."""
    assert verify_tower(tower()).verdict is verdict


def test_tower_witness_outside_plain_vertex():
    """Test that H must sit in a plain vertex group."""
    tower = s4.moebius_tower()
    floor = tower.floors[0]
    moved = TowerCandidate(
        tower.group, tower.floors, [BaseWitness("Sigma", (floor.target.word("h"),))], tower.ground, "moved"
    )
    report = moved.verify()
    assert report.verdict is Verdict.NOT_A_TOWER
    assert [check.name for check in report.failures] == ["floor 0: H inside Sigma"]


def test_tower_ground_mismatch():
    """Test the ground floor checks."""
    tower = s4.moebius_tower()
    too_big = TowerCandidate(tower.group, tower.floors, tower.witnesses, GroundFloor(Presentation(["h"]), 1, ()))
    report = too_big.verify()
    assert report.verdict is Verdict.NOT_A_TOWER
    [failure] = report.failures
    assert failure.name == "abelianization of the last group matches H * F * S1 * ... * Sp"
    assert failure.detail == "last group Z^1, ground floor Z^2"
    torus = TowerCandidate(s4.s4_presentation(), [], [], GroundFloor(None, 0, (SurfaceDatum.closed_orientable(1),)))
    assert "ground surfaces closed with Euler characteristic at most -2" in {
        check.name for check in torus.verify().failures
    }


def test_malformed_tower():
    """Test that floors must compose and come with one witness each."""
    tower = s4.moebius_tower()
    with pytest.raises(MalformedCandidateError):
        verify_tower(TowerCandidate(tower.group, tower.floors, [], tower.ground))
    with pytest.raises(MalformedCandidateError):
        verify_tower(TowerCandidate(free_products.zs_presentation(), tower.floors, tower.witnesses, tower.ground))


def test_report():
    """Test verification reports."""
    check = CheckResult.of("check", "clause", False, "detail")
    with pytest.raises(ValueError):
        VerificationReport("subject", Verdict.HYPERBOLIC_FLOOR, [check])
    report = VerificationReport("subject", Verdict.NOT_A_FLOOR, [check])
    assert report.render() == "subject: not a floor\n  [fail] check (clause): detail"
    assert report.to_records() == [
        {
            "kind": "check",
            "subject": "subject",
            "name": "check",
            "clause": "clause",
            "status": "fail",
            "detail": "detail",
        },
        {"kind": "verdict", "subject": "subject", "verdict": "not a floor", "accepted": False},
    ]
    assert not Verdict.NOT_CERTIFIED.accepting
    assert Verdict.CERTIFIED.accepting
