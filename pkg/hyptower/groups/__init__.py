# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Presentations, abelian invariants and word-problem models."""

__all__ = (
    "Presentation",
    "AbelianInvariants",
    "abelian_invariants",
    "symmetrize",
    "max_piece_length",
    "is_proper_power",
    "satisfies_c_prime_sixth",
    "DehnRewriter",
    "GroupModel",
    "FreeModel",
    "InfiniteCyclicModel",
    "SmallCancellationModel",
    "FreeProductModel",
    "CertificateModel",
    "Syllable",
    "classify",
    "model_for",
    "is_trivial",
    "are_equal",
    "commute",
    "free_product_normal_form",
)

from .abelian import AbelianInvariants, abelian_invariants
from .models import (
    CertificateModel,
    FreeModel,
    FreeProductModel,
    GroupModel,
    InfiniteCyclicModel,
    SmallCancellationModel,
    Syllable,
    are_equal,
    classify,
    commute,
    free_product_normal_form,
    is_trivial,
    model_for,
)
from .presentation import Presentation
from .small_cancellation import DehnRewriter, is_proper_power, max_piece_length, satisfies_c_prime_sixth, symmetrize
