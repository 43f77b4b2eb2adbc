# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Human readable text and line-delimited JSON records."""
from __future__ import annotations

import sys
from collections.abc import Iterable, Mapping
from typing import IO, Literal

import orjson

from hyptower._types import ResultRecord, ResultValue
from hyptower.catalog import CatalogSummary
from hyptower.towers import VerificationReport


__all__ = ("OutputFormat", "Output")

OutputFormat = Literal["text", "records"]


def _text(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, Mapping):
        return "\n".join(f"{key}: {_text(item)}" for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return "\n".join(map(_text, value))
    return str(value)


class Output:
    """Writes results and reports in one format to one stream."""

    __slots__ = ("_fmt", "_stream")

    def __init__(self, fmt: OutputFormat = "text", stream: IO[str] | None = None):
        self._fmt = fmt
        self._stream = stream

    @property
    def fmt(self) -> OutputFormat:
        """The output format."""
        return self._fmt

    def _write(self, line: str) -> None:
        print(line, file=self._stream or sys.stdout)

    def _record(self, record: Mapping) -> None:
        self._write(orjson.dumps(record).decode())

    def result(self, command: str, given: str, value: ResultValue) -> None:
        """The answer of a word, surface or presentation command."""
        if self._fmt == "records":
            self._record(ResultRecord(kind="result", command=command, input=given, result=value))
        else:
            self._write(_text(value))

    def reports(self, reports: Iterable[VerificationReport]) -> None:
        """Verification reports, one record per check plus a verdict record each."""
        for report in reports:
            if self._fmt == "records":
                for record in report.to_records():
                    self._record(record)
            else:
                self._write(report.render())

    def catalog(self, summary: CatalogSummary) -> None:
        """Catalog results followed by the summary."""
        for result in summary.results:
            if self._fmt == "records":
                for record in result.to_records():
                    self._record(record)
                continue
            mark = "ok" if result.matched else "MISMATCH"
            self._write(f"{result.report.render()}\n  expected: {result.expected.value} [{mark}]")
        if self._fmt == "records":
            self._record(summary.to_record())
        else:
            self._write(str(summary))
