# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Verdicts and verification reports."""
from __future__ import annotations

import enum
from collections.abc import Iterable

from hyptower._types import CheckRecord, VerdictRecord
from hyptower.checks import CheckResult, CheckStatus


__all__ = ("Verdict", "VerificationReport")


class Verdict(enum.Enum):
    """Overall outcome of a verification."""

    HYPERBOLIC_FLOOR = "hyperbolic floor"
    EXTENDED_HYPERBOLIC_FLOOR = "extended hyperbolic floor"
    NOT_A_FLOOR = "not a floor"
    HYPERBOLIC_TOWER = "hyperbolic tower"
    TOWER_OVER_TRIVIAL = "hyperbolic tower over the trivial group"
    EXTENDED_HYPERBOLIC_TOWER = "extended hyperbolic tower"
    NOT_A_TOWER = "not a tower"
    CERTIFIED = "certified"
    NOT_CERTIFIED = "not certified"

    @property
    def accepting(self) -> bool:
        """Whether the verdict is a positive one."""
        return self not in (Verdict.NOT_A_FLOOR, Verdict.NOT_A_TOWER, Verdict.NOT_CERTIFIED)


class VerificationReport:
    """An ordered list of checks and the verdict they support.

    The verdict is accepting exactly when no check failed.

    Raises
    ------
    ValueError
        If the verdict disagrees with the checks.
    """

    __slots__ = ("_subject", "_verdict", "_checks")

    def __init__(self, subject: str, verdict: Verdict, checks: Iterable[CheckResult]):
        self._subject = subject
        self._verdict = verdict
        self._checks = tuple(checks)
        if verdict.accepting == any(check.failed for check in self._checks):
            raise ValueError(f"Verdict {verdict.value!r} contradicts the checks of {subject!r}.")

    @property
    def subject(self) -> str:
        """What was verified."""
        return self._subject

    @property
    def verdict(self) -> Verdict:
        """The overall verdict."""
        return self._verdict

    @property
    def checks(self) -> tuple[CheckResult, ...]:
        """Checks in the order they ran."""
        return self._checks

    @property
    def accepted(self) -> bool:
        """Whether the verdict is positive."""
        return self._verdict.accepting

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        """Failed checks."""
        return tuple(check for check in self._checks if check.status is CheckStatus.FAIL)

    def to_records(self) -> list[CheckRecord | VerdictRecord]:
        """One record per check, then the verdict record."""
        records: list[CheckRecord | VerdictRecord] = [
            CheckRecord(
                kind="check",
                subject=self._subject,
                name=check.name,
                clause=check.clause,
                status=check.status.value,  # type: ignore[typeddict-item]
                detail=check.detail,
            )
            for check in self._checks
        ]
        records.append(
            VerdictRecord(kind="verdict", subject=self._subject, verdict=self._verdict.value, accepted=self.accepted)
        )
        return records

    def render(self) -> str:
        """Human readable text, one line per check."""
        lines = [f"{self._subject}: {self._verdict.value}"]
        lines.extend(f"  {check}" for check in self._checks)
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<VerificationReport subject={self._subject!r} verdict={self._verdict.value!r}>"
