# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT

"""Custom errors for hyptower."""

__all__ = (
    "AlphabetMismatchError",
    "GeneratorCollisionError",
    "UnsupportedModelError",
    "InvalidSurfaceError",
    "UnsupportedSurfaceError",
    "InvalidStructureError",
    "MalformedCandidateError",
    "DocumentParseError",
    "UnknownEntryError",
)

from .alphabet import AlphabetMismatchError, GeneratorCollisionError
from .candidates import InvalidStructureError, MalformedCandidateError
from .catalog import UnknownEntryError
from .models import UnsupportedModelError
from .parsing import DocumentParseError
from .surfaces import InvalidSurfaceError, UnsupportedSurfaceError
