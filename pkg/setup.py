"""Build script: compiles the optional Cython kernel extension.

The extension accelerates the Laurent-table folds at the heart of the
constant-term engine.  Everything works without it (a pure-Python fallback
with identical semantics is selected at import time), so any build failure
here downgrades to a pure install instead of aborting.
"""
import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/trace_poincare/kernels/_speedups.pyx",
        language_level=3,
    )
    for ext in ext_modules:
        ext.extra_compile_args = ["-O2"]
except Exception as exc:  # pragma: no cover - toolchain-dependent
    print(f"trace-poincare: skipping compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
