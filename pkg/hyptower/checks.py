# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Individual check results shared by structure validation and verification reports."""
from __future__ import annotations

import enum
from typing import NamedTuple


__all__ = ("CheckStatus", "CheckResult")


class CheckStatus(enum.Enum):
    """Outcome of one check. INFO records an observation that does not affect the verdict."""

    PASS = "pass"
    FAIL = "fail"
    INFO = "info"


class CheckResult(NamedTuple):
    """One named check, the definition clause it tests, its outcome and a detail line."""

    name: str
    clause: str
    status: CheckStatus
    detail: str = ""

    @property
    def failed(self) -> bool:
        """Whether the check failed."""
        return self.status is CheckStatus.FAIL

    @classmethod
    def of(cls, name: str, clause: str, ok: bool, detail: str = "") -> CheckResult:
        """PASS or FAIL depending on ``ok``."""
        return cls(name, clause, CheckStatus.PASS if ok else CheckStatus.FAIL, detail)

    def __str__(self) -> str:
        line = f"[{self.status.value}] {self.name} ({self.clause})"
        return f"{line}: {self.detail}" if self.detail else line
