# -*- coding: utf-8 -*-
#
# phin-linvariants documentation build configuration file.

import os
import sys

# Make ``src`` importable for autodoc.
sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'phin-linvariants'
version = '0.1'
release = '0.1'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'phin-linvariantsdoc'

latex_documents = [
    ('index', 'phin-linvariants.tex', u'phin-linvariants Documentation', u"Srikara S", 'manual'),
]

man_pages = [
    ('index', 'phin', u'phin command line reference', [u"Srikara S"], 1),
]
