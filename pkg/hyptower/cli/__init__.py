# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Command line interface, input documents and output formatting."""
from .commands import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    CandidateOutcome,
    build_parser,
    builtin_group,
    run,
    run_coroutine,
    verify_document,
)
from .document import SECTIONS, InputDocument, dumps, parse
from .literals import format_embedding, format_map, normalize_word, parse_embedding, parse_map
from .output import Output


__all__ = (
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_USAGE",
    "CandidateOutcome",
    "build_parser",
    "builtin_group",
    "run",
    "run_coroutine",
    "verify_document",
    "SECTIONS",
    "InputDocument",
    "dumps",
    "parse",
    "format_embedding",
    "format_map",
    "normalize_word",
    "parse_embedding",
    "parse_map",
    "Output",
)
