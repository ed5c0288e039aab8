"""Packaged resources: the h4 preset, the report schema and test fixtures.

.. autofunction:: load

.. automethod:: load.readable

.. automethod:: load.cached
"""

from __future__ import annotations

import atexit
import json
from contextlib import ExitStack
from functools import cache
from pathlib import Path

try:
    from importlib_resources import as_file, files
except ImportError:
    from importlib.resources import as_file, files  # type: ignore

__all__ = ["load"]


class Loader:
    """Handles on the files of a package; ``cached`` paths live until exit."""

    def __init__(self, anchor: str):
        self.files = files(anchor)
        self.exit_stack = ExitStack()
        atexit.register(self.exit_stack.close)

    def readable(self, *segments):
        """Return a read-only handle on a resource (may not exist on disk)."""
        return self.files.joinpath(*segments)

    @cache
    def cached(self, *segments) -> Path:
        """Return a filesystem path to a resource, valid until interpreter exit."""
        return self.exit_stack.enter_context(as_file(self.files.joinpath(*segments)))

    def json(self, *segments) -> dict:
        return json.loads(self.readable(*segments).read_text())


load = Loader(__package__)
