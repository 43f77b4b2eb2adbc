# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT

"""Decomposition and candidate errors."""
from typing import Any


class InvalidStructureError(ValueError):
    """Invalid structure error.

    Raised when a presentation is requested from a graph of groups whose structural checks fail.

    Parameters
    ----------
    report : Any
        The structure report listing the failed checks.
    """

    def __init__(self, report: Any):
        """Init."""
        super().__init__()
        self.report = report
        failed = ", ".join(check.name for check in report.failures)
        self.message = f"Graph of groups is structurally invalid, failed checks: {failed}."

    def __str__(self):
        """Get the error as a string."""
        return self.message


class MalformedCandidateError(ValueError):
    """Malformed candidate error.

    Raised when a floor or tower candidate violates its own invariants, for example when the retraction's source
    is not the presentation induced by the decomposition, or when consecutive floors do not compose.

    Parameters
    ----------
    reason : str
        The violated invariant.
    """

    def __init__(self, reason: str):
        """Init."""
        super().__init__()
        self.reason = reason
        self.message = f"Malformed candidate: {reason}"

    def __str__(self):
        """Get the error as a string."""
        return self.message
