"""Build hook for the optional compiled kernel extension.

The package works without the extension: snwalk.kernels falls back to the
numpy implementation when snwalk._speedups is missing. Set SNWALK_SKIP_EXT=1
to skip the build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SNWALK_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext = Extension(
            "snwalk._speedups",
            sources=["src/snwalk/_speedups.pyx"],
            optional=True,
        )
        ext_modules = cythonize(
            [ext], compiler_directives={"language_level": "3"}, quiet=True
        )

setup(ext_modules=ext_modules)
