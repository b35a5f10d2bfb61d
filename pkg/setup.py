"""Build script: compiles the numeric kernel extension when Cython is available.

The package works without the extension (a pure-Python twin of the kernels is
selected at import time), so a failed extension build downgrades to a warning
instead of aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/conesphere/_kernels_cy.pyx"],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": False,  # keep IEEE division semantics identical to CPython
        },
    )
except ImportError:
    print("conesphere: Cython not found, installing with pure-Python kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
