# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
# SPDX-License-Identifier: MIT
import logging
from concurrent.futures import ThreadPoolExecutor

import pytest
from pytest_mock import MockerFixture

from hyptower.catalog import (
    CatalogEntry,
    CatalogResult,
    get_entry,
    list_entries,
    run_all,
    run_entries,
    run_entry,
)
from hyptower.catalog import s4
from hyptower.checks import CheckStatus
from hyptower.errors import UnknownEntryError
from hyptower.towers import Verdict


NAMES = [entry.name for entry in list_entries()]
FLOORS = [
    entry.name
    for entry in list_entries()
    if entry.expected in (Verdict.HYPERBOLIC_FLOOR, Verdict.EXTENDED_HYPERBOLIC_FLOOR)
]


@pytest.mark.parametrize("name", NAMES)
def test_expected_verdicts(name):
    """Test that every catalog entry gets its expected verdict."""
    report = run_entry(name)
    assert report.subject == name
    assert report.verdict is get_entry(name).expected, report.render()


@pytest.mark.parametrize("name", ["s4-moebius-floor", "zs-h1-floor", "zs-h2-tower", "s2-commutator-conjugacy"])
def test_expected_verdicts_with_sampling(name):
    """Test that sampling does not change verdicts."""
    assert run_entry(name, samples=15, seed=7).verdict is get_entry(name).expected


@pytest.mark.parametrize("name", FLOORS)
def test_accepted_floors_pass_sampling(name):
    """Test r(i(w)) = w on 100 random words of G' for every accepted floor."""
    report = run_entry(name, samples=100, seed=11)
    assert report.verdict is get_entry(name).expected, report.render()
    sampled = report.checks[-1]
    assert (sampled.name, sampled.status, sampled.detail) == (
        "sampled r . i = id",
        CheckStatus.PASS,
        "100 random word(s) checked",
    )


def test_listing():
    """Test that entries are sorted by name and cover the expected shapes."""
    assert NAMES == sorted(NAMES)
    assert {"s4-moebius-floor", "s4-klein-floor", "zs-h1-tower", "zs-h2-tower", "zs-two-floor-tower"} <= set(NAMES)
    assert get_entry("p0-template-nonorientable-4").expected is Verdict.NOT_A_FLOOR
    assert get_entry("p0-template-nonorientable-5").expected is Verdict.HYPERBOLIC_FLOOR


def test_unknown_entry():
    """Test looking up an unknown entry."""
    with pytest.raises(UnknownEntryError) as excinfo:
        get_entry("no-such-entry")
    assert isinstance(excinfo.value, KeyError)
    assert "no-such-entry" in str(excinfo.value)


@pytest.mark.asyncio
async def test_run_entries_sequential():
    """Test running entries in the current process."""
    summary = await run_entries(["zs-h1-floor", "s4-moebius-floor", "zs-h1-floor"])
    assert [result.name for result in summary.results] == ["s4-moebius-floor", "zs-h1-floor"]
    assert (summary.passed, summary.failed, summary.total) == (2, 0, 2)
    assert str(summary) == "2 of 2 catalog entries matched their expected verdict"
    assert summary.to_record() == {"kind": "summary", "passed": 2, "failed": 0, "total": 2}


@pytest.mark.asyncio
async def test_run_entries_parallel(mocker: MockerFixture):
    """Test that workers are used when more than one job is requested."""
    executor = mocker.patch("hyptower.catalog.registry.ProcessPoolExecutor", side_effect=ThreadPoolExecutor)
    summary = await run_entries(["zs-h1-floor", "s4-klein-floor", "s4-profiles"], jobs=2)
    executor.assert_called_once_with(max_workers=2)
    assert [result.name for result in summary.results] == ["s4-klein-floor", "s4-profiles", "zs-h1-floor"]
    assert summary.failed == 0


@pytest.mark.asyncio
async def test_run_entries_unknown(mocker: MockerFixture):
    """Test that unknown names fail before any entry runs."""
    run = mocker.patch("hyptower.catalog.registry.run_entry")
    with pytest.raises(UnknownEntryError):
        await run_entries(["s4-moebius-floor", "nope"])
    run.assert_not_called()


def test_result_records():
    """Test that results extend the verdict record with the expectation."""
    result = CatalogResult(Verdict.HYPERBOLIC_FLOOR, run_entry("s4-trivial-tower"))
    assert not result.matched
    verdict = result.to_records()[-1]
    assert verdict["verdict"] == "hyperbolic tower over the trivial group"
    assert verdict["expected"] == "hyperbolic floor"
    assert verdict["matched"] is False


def test_mismatch_is_logged(mocker: MockerFixture, caplog):
    """Test that a verdict different from the expected one is logged."""
    entry = CatalogEntry("broken", "a deliberately wrong expectation", Verdict.HYPERBOLIC_FLOOR, s4.trivial_tower)
    mocker.patch.dict("hyptower.catalog.registry.ENTRIES", {"broken": entry})
    report = run_entry("broken")
    assert report.verdict is Verdict.TOWER_OVER_TRIVIAL
    assert (
        "hyptower.catalog",
        logging.WARNING,
        "Catalog entry broken: expected hyperbolic floor, got hyperbolic tower over the trivial group",
    ) in caplog.record_tuples


def test_run_all(mocker: MockerFixture):
    """Test running the whole catalog."""
    mocker.patch.dict(
        "hyptower.catalog.registry.ENTRIES",
        {name: get_entry(name) for name in ("s4-trivial-tower", "free-basis-checks")},
        clear=True,
    )
    summary = run_all()
    assert summary.total == 2
    assert summary.failed == 0
