# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Named floors, towers and word-level checks with their expected verdicts."""

__all__ = (
    "Verifiable",
    "CatalogEntry",
    "CatalogResult",
    "CatalogSummary",
    "WordCheckSuite",
    "list_entries",
    "get_entry",
    "run_entry",
    "run_entries",
    "run_all",
)

from .registry import (
    CatalogEntry,
    CatalogResult,
    CatalogSummary,
    Verifiable,
    get_entry,
    list_entries,
    run_all,
    run_entries,
    run_entry,
)
from .word_checks import WordCheckSuite
