# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT

"""Unsupported group model error."""


class UnsupportedModelError(ValueError):
    """Unsupported model error.

    Raised when a presentation fits none of the supported word-problem strategies, or when a
    certificate-only model is asked a question it cannot settle.

    Parameters
    ----------
    reason : str
        Why the presentation or question is unsupported.
    """

    def __init__(self, reason: str):
        """Init."""
        super().__init__()
        self.reason = reason
        self.message = f"Unsupported group model: {reason}"

    def __str__(self):
        """Get the error as a string."""
        return self.message
