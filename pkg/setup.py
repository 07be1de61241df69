"""Build script: compiles the optional word-kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure to cythonize or
compile downgrades to a pure build instead of aborting the install.
Set ORBITBRAIDS_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"orbitbraids: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"orbitbraids: skipping {ext.name} ({exc})")


ext_modules = []
if os.environ.get("ORBITBRAIDS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("orbitbraids._kernels_cy", ["src/orbitbraids/_kernels_cy.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("orbitbraids: Cython not available, building without compiled kernels")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
