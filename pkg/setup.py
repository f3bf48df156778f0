"""Build script: compiles the optional Cython speedup kernels.

The package works without the extension (a pure-Python implementation of
the same kernels is selected at import time), so a failed build of the
extension is not fatal for development installs built with
``pip install -e . --no-build-isolation``.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hornlr._kernels._speedups",
                ["src/hornlr/_kernels/_speedups.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
