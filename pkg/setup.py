"""Build script for the optional compiled kernel extension.

The package is fully functional without it (a NumPy implementation is
selected at import time); the extension only speeds up the raster kernels.
A failed compile therefore downgrades to a warning instead of aborting
the install.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"compiled kernels skipped ({exc}); using NumPy fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({exc}); using NumPy fallback")


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("cython/numpy unavailable; building without compiled kernels")
        return []
    from setuptools import Extension

    return cythonize(
        [
            Extension(
                "topview.kernels._native",
                ["src/topview/kernels/_native.pyx"],
                include_dirs=[numpy.get_include()],
                # -ffp-contract=off keeps float results identical to NumPy's
                extra_compile_args=["-O3", "-ffp-contract=off"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
