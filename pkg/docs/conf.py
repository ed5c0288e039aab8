# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
from datetime import datetime

from packaging.version import Version

# -- Path setup --------------------------------------------------------------
here = os.path.dirname(__file__)
sys.path.insert(0, os.path.join(here, ".."))

# -- General configuration ---------------------------------------------------

needs_sphinx = "1.5.3"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinxarg.ext",  # argparse extension
    "myst_nb",  # stop segregating rst/md
]

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
source_suffix = [".rst", ".md"]

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

napoleon_use_param = False
myst_heading_anchors = 3
myst_enable_extensions = [
    "colon_fence",
    "dollarmath",
    "substitution",
]

# -- Project information -----------------------------------------------------
project = "qoscillator"
author = "The qoscillator developers"
copyright = "2024-%s, %s" % (datetime.now().year, author)

import qoscillator  # noqa: E402

qoscillator_ver = Version(qoscillator.__version__)
release = "version" if qoscillator_ver.is_prerelease else qoscillator_ver.public
myst_substitutions = {
    "release": release,
    "version": str(qoscillator_ver),
}

highlight_language = "none"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}
