"""Build script; compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
twin is selected at import), so any failure here downgrades to a plain
build instead of aborting the install.
"""

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    try:
        return cythonize(
            [Extension("qaffine._core", ["src/qaffine/_core.pyx"])],
            language_level=3,
        )
    except Exception:
        return []


setup(ext_modules=extensions())
