"""Build the optional Cython kernels.

The package works without them; set KUMMER_NO_EXT=1 to skip compilation.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("KUMMER_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("kummer._ckernels", ["src/kummer/_ckernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
