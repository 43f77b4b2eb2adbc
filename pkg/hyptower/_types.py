# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Record shapes emitted in machine-readable output."""
from typing import Literal, Union

from typing_extensions import NotRequired, TypeAlias, TypedDict


__all__ = ("CheckRecord", "VerdictRecord", "ResultValue", "ResultRecord", "SummaryRecord")

ResultValue: TypeAlias = Union[str, int, bool, list[str], dict[str, Union[str, int, bool, None]], None]


class CheckRecord(TypedDict):
    """One check of a verification report."""

    kind: Literal["check"]
    subject: str
    name: str
    clause: str
    status: Literal["pass", "fail", "info"]
    detail: str


class VerdictRecord(TypedDict):
    """The closing record of a verification report."""

    kind: Literal["verdict"]
    subject: str
    verdict: str
    accepted: bool
    expected: NotRequired[str]
    matched: NotRequired[bool]


class ResultRecord(TypedDict):
    """The answer of a word, surface or presentation command."""

    kind: Literal["result"]
    command: str
    input: str
    result: ResultValue


class SummaryRecord(TypedDict):
    """Counts after running several catalog entries."""

    kind: Literal["summary"]
    passed: int
    failed: int
    total: int
