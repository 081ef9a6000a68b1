"""Build script: compiles the optional fast elimination kernel.

The package works without the extension (a numpy-based fallback is selected
at import time), so a failed compile only costs speed. Set STOCHPOLY_NO_EXT=1
to skip the extension build entirely.
"""
import os

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

ext_modules = []
if not os.environ.get("STOCHPOLY_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/stochpoly/_kernels/_bareiss.pyx"],
            language_level=3,
        )
    except ImportError:
        ext_modules = []


class OptionalBuildExt(build_ext):
    """Degrade to the pure-Python kernels if the C toolchain is unusable."""

    def run(self):
        try:
            super().run()
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError):
            self.extensions = []

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError):
            pass


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
