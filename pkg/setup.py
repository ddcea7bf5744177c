"""Build script: compiles the optional Cython kernel extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
package installs anyway and falls back to the pure-Python kernels at
import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Let the install proceed when the extension cannot be compiled."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing / broken toolchain
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        sys.stderr.write(
            "warning: building the compiled kernels failed (%s); "
            "falling back to the pure-Python kernels\n" % (exc,))


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write(
            "warning: Cython not available, skipping compiled kernels\n")
        return []
    ext = Extension(
        "condasian._kernels._corefast",
        sources=["src/condasian/_kernels/_corefast.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
