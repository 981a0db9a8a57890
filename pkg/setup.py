"""Build script: compiles the optional speedup extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so a missing compiler or Cython only costs performance.
Set BPB_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Swallow extension build failures; the pure backend still works."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - deliberately broad
            print(f"warning: skipping compiled extension ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "falling back to the pure-Python kernels")


ext_modules = []
if os.environ.get("BPB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/bpb/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; building without the extension")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
