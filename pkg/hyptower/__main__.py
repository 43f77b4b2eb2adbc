# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Hyptower command line."""
import logging.config
import sys
from collections.abc import Sequence

from . import Config
from .cli import build_parser, run as run_command


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments and run one command, returning the exit status."""
    logging.config.dictConfig(Config["logging"])  # skipcq: PY-A6006
    args = build_parser().parse_args(argv)
    return run_command(args)


def run() -> None:
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
