# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""The catalog of named constructions, each with the verdict it must receive."""
from __future__ import annotations

import asyncio
import functools
import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple, Protocol

from hyptower._types import CheckRecord, SummaryRecord, VerdictRecord
from hyptower.errors import UnknownEntryError
from hyptower.towers import Verdict, VerificationReport

from . import free_products, s4, templates, word_checks


__all__ = (
    "Verifiable",
    "CatalogEntry",
    "CatalogResult",
    "CatalogSummary",
    "list_entries",
    "get_entry",
    "run_entry",
    "run_entries",
    "run_all",
)

logger = logging.getLogger("hyptower.catalog")


class Verifiable(Protocol):
    """Anything a catalog entry can build: floors, towers and word check suites."""

    @property
    def name(self) -> str:
        ...

    def verify(self, *, samples: int = 0, seed: int | None = None) -> VerificationReport:
        ...


class CatalogEntry(NamedTuple):
    """A named construction, what it encodes, and its expected verdict."""

    name: str
    description: str
    expected: Verdict
    build: Callable[[], Verifiable]


class CatalogResult(NamedTuple):
    """The report of one entry next to the verdict it was expected to get."""

    expected: Verdict
    report: VerificationReport

    @property
    def name(self) -> str:
        """The entry's name."""
        return self.report.subject

    @property
    def matched(self) -> bool:
        """Whether the actual verdict is the expected one."""
        return self.report.verdict is self.expected

    def to_records(self) -> list[CheckRecord | VerdictRecord]:
        """The report's records, the verdict record extended with the expectation."""
        records = self.report.to_records()
        verdict: VerdictRecord = records[-1]  # type: ignore[assignment]
        verdict["expected"] = self.expected.value
        verdict["matched"] = self.matched
        return records


class CatalogSummary(NamedTuple):
    """Results of several entries, sorted by name."""

    results: tuple[CatalogResult, ...]

    @property
    def passed(self) -> int:
        """Entries whose verdict matched."""
        return sum(result.matched for result in self.results)

    @property
    def failed(self) -> int:
        """Entries whose verdict did not match."""
        return len(self.results) - self.passed

    @property
    def total(self) -> int:
        """Number of entries run."""
        return len(self.results)

    def to_record(self) -> SummaryRecord:
        """The summary as a machine-readable record."""
        return {"kind": "summary", "passed": self.passed, "failed": self.failed, "total": self.total}

    def __str__(self) -> str:
        return f"{self.passed} of {self.total} catalog entries matched their expected verdict"


_FLOOR = Verdict.HYPERBOLIC_FLOOR
_EXTENDED = Verdict.EXTENDED_HYPERBOLIC_FLOOR
_TOWER = Verdict.HYPERBOLIC_TOWER
_EXTENDED_TOWER = Verdict.EXTENDED_HYPERBOLIC_TOWER
_TRIVIAL = Verdict.TOWER_OVER_TRIVIAL
_CERTIFIED = Verdict.CERTIFIED

_ENTRIES = (
    CatalogEntry("s4-moebius-floor", "four crosscaps over <h>, Möbius band complement", _EXTENDED, s4.moebius_floor),
    CatalogEntry("s4-klein-floor", "four crosscaps over <h>, annulus complement", _EXTENDED, s4.klein_floor),
    CatalogEntry("s4-trivial-tower", "four crosscaps over the trivial group", _TRIVIAL, s4.trivial_tower),
    CatalogEntry("s4-moebius-tower", "four crosscaps over <h>, Möbius floor", _EXTENDED_TOWER, s4.moebius_tower),
    CatalogEntry("s4-klein-tower", "four crosscaps over <h>, Klein floor", _EXTENDED_TOWER, s4.klein_tower),
    CatalogEntry(
        "s4-punctured-klein-obstruction",
        "no floor of four crosscaps puts a once-punctured torus over a punctured Klein bottle",
        _CERTIFIED,
        word_checks.punctured_klein_obstruction,
    ),
    CatalogEntry("s4-profiles", "floor profiles of four crosscaps", _CERTIFIED, word_checks.s4_profiles),
    CatalogEntry(
        "s2-commutator-conjugacy",
        "commutators of bases of F2 are conjugate to [a, b] or its inverse",
        _CERTIFIED,
        word_checks.commutator_conjugacy,
    ),
    CatalogEntry("free-basis-checks", "bases and primitive elements", _CERTIFIED, word_checks.basis_checks),
    CatalogEntry("zs-h1-floor", "Z * S over <a, b, z>", _FLOOR, free_products.h1_floor),
    CatalogEntry(
        "zs-h1-wrong-retraction",
        "Z * S over <a, b, z> with a map that is not a homomorphism",
        Verdict.NOT_A_FLOOR,
        free_products.h1_wrong_retraction,
    ),
    CatalogEntry("zs-h2-floor", "Z * S over <u, w>", _FLOOR, free_products.h2_floor),
    CatalogEntry("zs-trivial-tower", "Z * S over the trivial group", _TRIVIAL, free_products.trivial_tower),
    CatalogEntry("zs-h1-tower", "Z * S over <a, b, z>", _TOWER, free_products.h1_tower),
    CatalogEntry("zs-h2-tower", "Z * S over <u, w>", _TOWER, free_products.h2_tower),
    CatalogEntry("zs-two-floor-tower", "two floors down to <a, b, z>", _TOWER, free_products.two_floor_tower),
    CatalogEntry("zs-profiles", "subsurfaces of the Z * S surface pieces", _CERTIFIED, word_checks.zs_profiles),
    *(
        CatalogEntry(
            f"p0-template-orientable-{genus}",
            f"genus {genus} over <a1, b1>",
            _FLOOR,
            functools.partial(templates.orientable_floor, genus),
        )
        for genus in range(2, 5)
    ),
    *(
        CatalogEntry(
            f"p0-template-nonorientable-{crosscaps}",
            f"{crosscaps} crosscaps over <d1, d2>",
            _FLOOR if crosscaps >= 5 else Verdict.NOT_A_FLOOR,
            functools.partial(templates.nonorientable_floor, crosscaps),
        )
        for crosscaps in range(4, 9)
    ),
    CatalogEntry(
        "p0-template-nonorientable-4-extended",
        "four crosscaps through an extended floor over <h>",
        _EXTENDED,
        templates.nonorientable_extended,
    ),
    CatalogEntry(
        "p0-template-nonorientable-4-free-product",
        "four crosscaps over <h> * S2",
        _FLOOR,
        templates.nonorientable_free_product,
    ),
)

ENTRIES: dict[str, CatalogEntry] = {entry.name: entry for entry in sorted(_ENTRIES, key=lambda entry: entry.name)}


def list_entries() -> tuple[CatalogEntry, ...]:
    """All entries, sorted by name."""
    return tuple(ENTRIES.values())


def get_entry(name: str) -> CatalogEntry:
    """Look an entry up by name.

    Raises
    ------
    UnknownEntryError
        If there is no such entry.
    """
    try:
        return ENTRIES[name]
    except KeyError:
        raise UnknownEntryError(name) from None


def run_entry(name: str, *, samples: int = 0, seed: int | None = None) -> VerificationReport:
    """Build and verify one entry.

    The report's subject is the entry name; compare its verdict with ``get_entry(name).expected``.
    """
    entry = get_entry(name)
    report = entry.build().verify(samples=samples, seed=seed)
    if report.verdict is not entry.expected:
        logger.warning("Catalog entry %s: expected %s, got %s", name, entry.expected.value, report.verdict.value)
    return VerificationReport(name, report.verdict, report.checks)


def _result(name: str, samples: int, seed: int | None) -> CatalogResult:
    return CatalogResult(get_entry(name).expected, run_entry(name, samples=samples, seed=seed))


async def run_entries(
    names: Iterable[str], *, jobs: int = 1, samples: int = 0, seed: int | None = None
) -> CatalogSummary:
    """Verify entries, in worker processes when ``jobs > 1``.

    Raises
    ------
    UnknownEntryError
        Before any work starts, if a name is unknown.
    """
    ordered = sorted(set(names))
    for name in ordered:
        get_entry(name)
    if jobs <= 1:
        results = [_result(name, samples, seed) for name in ordered]
    else:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = await asyncio.gather(
                *(loop.run_in_executor(pool, _result, name, samples, seed) for name in ordered)
            )
    summary = CatalogSummary(tuple(results))
    logger.info("%s", summary)
    return summary


def run_all(*, jobs: int = 1, samples: int = 0, seed: int | None = None) -> CatalogSummary:
    """Verify every entry and count matches."""
    return asyncio.run(run_entries(ENTRIES, jobs=jobs, samples=samples, seed=seed))
