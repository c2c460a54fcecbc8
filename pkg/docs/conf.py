# -*- coding: utf-8 -*-
#
# conf.py
#
# This file is part of ommlab.
#
# Copyright (C) 2026 The ommlab developers
#
# ommlab is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# ommlab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with ommlab.  If not, see <http://www.gnu.org/licenses/>.

# Configuration file for the Sphinx documentation builder, run from docs/
# with `sphinx-build . _build`.

from datetime import date

import os
import sys

sys.path.insert(0, os.path.abspath("../src"))

extensions = [
    "sphinx.ext.autosummary",
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
]

autosummary_generate = True

napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = False
napoleon_include_private_with_doc = False
napoleon_use_ivar = True
napoleon_use_param = True
napoleon_use_rtype = True

source_suffix = ".rst"
source_encoding = "utf-8"
master_doc = "index"
exclude_patterns = ["_build"]

project = "ommlab"
copyright = f"2026-{date.today().year}, The ommlab developers"

import ommlab

version = ommlab.__version__
release = ommlab.__version__

add_module_names = False
pygments_style = "manni"
modindex_common_prefix = ["ommlab."]
html_theme = "alabaster"
