# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.append(os.path.abspath('_ext'))


# -- Project information -----------------------------------------------------

project = 'sobolevop'
copyright = '2026, sobolevop developers'
author = 'sobolevop developers'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autosummary',
    'numpydoc',
    'family_default_methods',
]

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'furo'

html_static_path = ['_static']


# -- numpydoc extension -----------------------------------------------------

numpydoc_show_class_members = False
