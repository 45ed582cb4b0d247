"""Build hooks: compile the optional speedup extension when Cython and a C
compiler are available, otherwise install the pure-Python package unchanged."""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install because the extension would not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: skipping compiled kernels ({exc}); "
              "matdecide will use the pure-Python fallback")


def extensions():
    if os.environ.get("MATDECIDE_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("matdecide._ck", ["src/matdecide/_ck.pyx"])
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
