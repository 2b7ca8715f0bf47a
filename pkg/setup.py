"""Build script: compiles the optional Cython search kernel.

The package is fully functional without the extension (a pure-Python
twin of the kernel is selected at import time), so a failed compile
downgrades to a warning instead of aborting the install.
"""

import os
import sys
import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            warnings.warn(f"compiled search kernel skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled search kernel skipped ({ext.name}): {exc}")


ext_modules = []
if os.environ.get("TWOWALK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/twowalk/_search_c.pyx"],
            language_level=3,
        )
    except ImportError:
        print("Cython not available; installing with pure-Python kernel only", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
