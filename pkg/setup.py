"""Build script: compiles the optional search-kernel extension when Cython is
available. The package is fully functional without it (pure-Python kernels
are selected at import time), so any build failure here only costs speed."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/kdefect/_ckernels.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not available; building without the compiled kernels")

setup(ext_modules=ext_modules)
