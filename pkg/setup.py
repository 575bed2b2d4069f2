"""Build script for the optional Cython kernels.

The package works without them: ``pocket_spectra._backend`` falls back to
pure Python/numpy when ``pocket_spectra._kernels`` cannot be imported.
"""
import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Treat a failed compile as a warning so installs still succeed."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    def _warn(self, exc):
        sys.stderr.write(
            f"warning: could not build {self.extensions[0].name} ({exc}); "
            "falling back to the pure-Python kernels\n"
        )


def extensions():
    if os.environ.get("POCKET_SPECTRA_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "pocket_spectra._kernels",
        ["src/pocket_spectra/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
