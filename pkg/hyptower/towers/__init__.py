# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Floor and tower candidates and their verification."""

__all__ = (
    "Verdict",
    "VerificationReport",
    "Extension",
    "FloorCandidate",
    "BaseWitness",
    "GroundFloor",
    "TowerCandidate",
    "verify_floor",
    "verify_tower",
    "step_limit_from_config",
    "sample_length_from_config",
)

from .candidates import BaseWitness, Extension, FloorCandidate, GroundFloor, TowerCandidate
from .report import Verdict, VerificationReport
from .verify import sample_length_from_config, step_limit_from_config, verify_floor, verify_tower
