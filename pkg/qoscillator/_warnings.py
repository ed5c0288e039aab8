"""Send Python warnings to the ``py.warnings`` logger instead of stderr.

Imported by :mod:`qoscillator.config` unless ``QOSCILLATOR_SHOW_WARNINGS`` is set.
"""

import logging
import warnings
from pathlib import Path

_wlog = logging.getLogger("py.warnings")
_wlog.addHandler(logging.NullHandler())


def _category_name(category):
    if category is None:
        return "WARNING"
    name = category.__name__ if isinstance(category, type) else type(category).__name__
    return name.replace("Warning", "WARNING") if name != "Warning" else "WARNING"


def _showwarning(message, category, filename, lineno, file=None, line=None):
    _wlog.warning("%s: %s [%s:%d]", _category_name(category), message, Path(filename).name, lineno)


warnings.showwarning = _showwarning
