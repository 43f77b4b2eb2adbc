# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Whitehead's algorithm on free groups."""

__all__ = (
    "WhiteheadAutomorphism",
    "SubgroupGraph",
    "whitehead_generators",
    "rank_alphabet",
    "generates_whole_group",
    "total_cyclic_length",
    "minimize",
    "is_primitive",
    "is_basis",
)

from .automorphisms import WhiteheadAutomorphism, rank_alphabet, whitehead_generators
from .folding import SubgroupGraph, generates_whole_group
from .minimize import is_basis, is_primitive, minimize, total_cyclic_length
