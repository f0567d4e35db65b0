"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the hot loops
(path-word counting and sparse polynomial products).  If Cython or a C
compiler is unavailable the extension is skipped and the pure fallback in
motzkin._speedups._pure is used at runtime.  Set MOTZKIN_NO_EXT=1 to skip the
extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MOTZKIN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "motzkin._speedups._kernels",
                    ["src/motzkin/_speedups/_kernels.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
