# Sphinx configuration for the qconj documentation

import os
import sys

here = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(here, '..', 'src'))

autodoc_mock_imports = ['h5py', 'yaml', 'tqdm', 'numpy', 'sympy']

project = 'qconj'
author = 'qconj developers'
copyright = f'2024, {author}'

with open(os.path.join(here, '..', 'VERSION')) as f:
    release = f.read().strip()
version = '.'.join(release.split('.')[:2])

extensions = [
    'sphinx.ext.autodoc',
    'autoapi.extension',
    'recommonmark',
    'sphinx.ext.autosectionlabel',
    'sphinx.ext.viewcode',
]
exclude_patterns = ['_build']

# the qconj/*.rst pages place the autoapi directives by hand
autoapi_dirs = [os.path.join(here, '..', 'src', 'qconj')]
autoapi_add_toctree_entry = False
autoapi_generate_api_docs = False
autosectionlabel_prefix_document = True

html_theme = 'sphinx_rtd_theme'
