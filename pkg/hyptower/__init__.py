# -*- coding: utf-8 -*-
# SPDX-FileCopyrightText: 2024 The hyptower developers
#
# SPDX-License-Identifier: MIT
"""Hyptower: verification of hyperbolic floors and towers over finitely presented groups."""
import functools as _functools
import logging
import os as _os
import pathlib as _pathlib
import sys as _sys
from importlib import metadata as _metadata
from typing import Any


__title__ = "hyptower"
__author__ = "The hyptower developers"
__license__ = "MIT"
__copyright__ = "Copyright 2024-present The hyptower developers"
try:
    __version__ = _metadata.version(__title__)
except _metadata.PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"

__all__ = ("Config",)

if _sys.version_info >= (3, 11):
    import tomllib as _tomllib
else:  # pragma: no cover
    import tomli as _tomllib  # type: ignore


class _Config:
    """Settings read from ``config.toml``.

    Whole sections are read with ``Config["verification"]`` and single keys with
    ``Config.get("verification", "piece_bound")``. A missing key is logged and raises `KeyError`. Lookups are cached
    until `clear_cache` is called; the ``HYPTOWER_CONFIG`` environment variable replaces the shipped file.
    """

    __instance__: "_Config"
    logger = logging.getLogger("hyptower.config")

    @property
    def _file(self) -> _pathlib.Path:
        override = _os.environ.get("HYPTOWER_CONFIG")
        return _pathlib.Path(override) if override else _pathlib.Path(__file__).parent / "config.toml"

    def clear_cache(self):
        """Forget cached lookups, after ``HYPTOWER_CONFIG`` or the file changed."""
        self.logger.info(
            "Clearing config cache, this can cause previously expected values to disappear. Cache stats: %r",
            self.get.cache_info(),
        )
        self.get.cache_clear()

    def __new__(cls):
        if not hasattr(cls, "__instance__"):
            cls.__instance__ = super(_Config, cls).__new__(cls)
        return cls.__instance__

    def __getitem__(self, section: str) -> dict[str, Any]:
        return self.get(section)

    @_functools.cache
    def get(self, *keys: str) -> Any:
        """Follow ``keys`` into the config file."""
        with open(self._file, "rb") as f:
            value: Any = _tomllib.load(f)
        try:
            for key in keys:
                value = value[key]
        except KeyError:
            self.logger.exception("Tried to get key %s from config file, but it was not found.", ":".join(keys))
            raise
        self.logger.info("Got key %s from config file.", ":".join(keys))
        return value


Config = _Config()
