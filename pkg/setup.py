"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so any failure here only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/rescur/_speedups.pyx",
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"rescur: skipping compiled kernel ({exc}); pure-Python kernel will be used")

setup(ext_modules=ext_modules)
