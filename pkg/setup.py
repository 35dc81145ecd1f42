"""Build the optional Cython kernels.

The package works without them: ``hyperconic._backend`` falls back to the
pure-Python kernels when the extension is missing.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HYPERCONIC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "hyperconic._kernels",
                    ["src/hyperconic/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
