# Configuration file for the Sphinx documentation builder.
#
# Only the options that differ from the sphinx-quickstart defaults are set.

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# -- Project information -----------------------------------------------------

project = "cancellative_bounds"
version = "1.0"
release = "1.0.0"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
]
templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"

# numba ufuncs hide their docstrings, document the public wrappers only
autodoc_default_options = {
    "members": True,
    "undoc-members": False,
}

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinxdoc"
html_static_path = ["_static"]
htmlhelp_basename = "cancellative_boundsdoc"

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (
        master_doc,
        "cancellative_bounds.tex",
        "cancellative\\_bounds Documentation",
        "",
        "manual",
    )
]
