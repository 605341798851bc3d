"""Build script: compiles the optional Cython term-product kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time); the build therefore never fails hard
when Cython or a C compiler is missing.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SUPERBER_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/superber/_kernel_cy.pyx"],
            language_level=3,
        )
        for ext in ext_modules:
            ext.optional = True
    except ImportError:
        pass

setup(ext_modules=ext_modules)
