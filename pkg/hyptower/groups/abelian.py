# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Abelianization invariants via the Smith normal form."""
from __future__ import annotations

from collections.abc import Iterable
from typing import NamedTuple

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form

from .presentation import Presentation


__all__ = ("AbelianInvariants", "abelian_invariants")


class AbelianInvariants(NamedTuple):
    """``Z^free_rank`` plus the cyclic groups ``Z/d`` for each torsion coefficient ``d > 1``, sorted."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __add__(self, other: object) -> AbelianInvariants:  # type: ignore[override]
        """Direct sum."""
        if not isinstance(other, AbelianInvariants):
            return NotImplemented
        return AbelianInvariants(self.free_rank + other.free_rank, tuple(sorted(self.torsion + other.torsion)))

    @classmethod
    def total(cls, parts: Iterable[AbelianInvariants]) -> AbelianInvariants:
        """Direct sum of several groups."""
        result = cls(0)
        for part in parts:
            result = result + part
        return result

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) or "0"


def abelian_invariants(presentation: Presentation) -> AbelianInvariants:
    """The abelianization of a presentation.

    Torsion coefficients are reported as invariant factors, so ``Z/2 + Z/3`` appears as ``Z/6``.
    """
    rank = len(presentation.alphabet)
    rows = [row for row in presentation.exponent_matrix() if any(row)]
    if not rows or not rank:
        return AbelianInvariants(rank)
    normal = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [abs(int(normal[i, i])) for i in range(min(normal.shape))]
    nonzero = [d for d in diagonal if d]
    return AbelianInvariants(rank - len(nonzero), tuple(sorted(d for d in nonzero if d != 1)))
