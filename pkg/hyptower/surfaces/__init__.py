# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Compact surfaces, their standard presentations and floor profiles."""

__all__ = (
    "SurfaceDatum",
    "SurfacePresentation",
    "FloorProfile",
    "Rejection",
    "RejectionReason",
    "euler_from_presentation_data",
    "connected_sum",
    "puncture",
    "homeomorphic",
    "mixed_form_to_crosscaps",
    "is_floor_admissible",
    "standard_presentation",
    "bounded_surfaces",
    "enumerate_floor_profiles",
    "enumerate_subsurfaces",
)

from .datum import (
    SurfaceDatum,
    connected_sum,
    euler_from_presentation_data,
    homeomorphic,
    is_floor_admissible,
    mixed_form_to_crosscaps,
    puncture,
)
from .presentation import SurfacePresentation, standard_presentation
from .profiles import (
    FloorProfile,
    Rejection,
    RejectionReason,
    bounded_surfaces,
    enumerate_floor_profiles,
    enumerate_subsurfaces,
)
