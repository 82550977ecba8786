"""Build script: compiles the GF(p) elimination kernel when Cython is available.

The package works without the extension (a numpy fallback is selected at
import time); set TORICGRAPH_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext as _build_ext


class optional_build_ext(_build_ext):
    """Build the extension if possible, fall back to pure python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: extension build skipped ({exc}); using fallback kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); using fallback kernels")


extensions = []
if not os.environ.get("TORICGRAPH_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        extensions = cythonize(
            [
                Extension(
                    "toricgraph._kernels._gfcore",
                    sources=["src/toricgraph/_kernels/_gfcore.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
