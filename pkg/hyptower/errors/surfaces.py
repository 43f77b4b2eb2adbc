# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT

"""Surface errors."""
from typing import Any


class InvalidSurfaceError(ValueError):
    """Invalid surface error.

    Raised when surface data does not describe a compact surface, or violates an operation's precondition.

    Parameters
    ----------
    reason : str
        What is wrong with the data.
    """

    def __init__(self, reason: str):
        """Init."""
        super().__init__()
        self.reason = reason
        self.message = f"Invalid surface: {reason}"

    def __str__(self):
        """Get the error as a string."""
        return self.message


class UnsupportedSurfaceError(ValueError):
    """Unsupported surface error.

    Raised when an operation is asked about a surface it does not handle, such as the standard presentation of
    the sphere.

    Parameters
    ----------
    surface : Any
        The surface datum that was rejected.
    reason : str
        Why it is unsupported.
    """

    def __init__(self, surface: Any, reason: str):
        """Init."""
        super().__init__()
        self.surface = surface
        self.message = f"Unsupported surface {surface}: {reason}"

    def __str__(self):
        """Get the error as a string."""
        return self.message
