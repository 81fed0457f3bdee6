"""Build script: compiles the optional search kernel extension.

The package works without the extension (a pure-Python kernel is selected at
import time); the build therefore degrades gracefully when Cython or a C
compiler is unavailable.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lmpfs/_kernel/_ckernel.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
