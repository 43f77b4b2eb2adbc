# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT

"""Catalog lookup error."""


class UnknownEntryError(KeyError):
    """Unknown entry error.

    Raised when a catalog entry is requested by a name that is not registered.

    Parameters
    ----------
    name : str
        The requested entry name.
    """

    def __init__(self, name: str):
        """Init."""
        super().__init__(name)
        self.name = name
        self.message = f"No catalog entry named {name!r}."

    def __str__(self):
        """Get the error as a string."""
        return self.message
