# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT

"""Document parse error."""


class DocumentParseError(ValueError):
    """Document parse error.

    Raised for syntax errors in words, surface and map literals, and input documents, and for document references
    that do not resolve.

    Parameters
    ----------
    message : str
        The problem description.
    line : int | None
        1-based line of the problem, when known.
    column : int | None
        1-based column of the problem, when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        """Init."""
        super().__init__()
        self.line = line
        self.column = column
        if line is not None and column is not None:
            self.message = f"{message} (at line {line}, column {column})"
        elif line is not None:
            self.message = f"{message} (at line {line})"
        else:
            self.message = message

    def __str__(self):
        """Get the error as a string."""
        return self.message
