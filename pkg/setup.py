"""Build the optional compiled elimination kernel.

The package works without it: ``gkm.exact`` falls back to the pure-Python
kernel when ``gkm._elim_ext`` cannot be imported.
"""
import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: compiled kernel not built ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print(f"warning: failed to build {ext.name} ({exc}); using pure Python")


def extensions():
    if os.environ.get("GKM_NO_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    # directives live in the .pyx header
    return cythonize([Extension("gkm._elim_ext", ["src/gkm/_elim_ext.pyx"], extra_compile_args=["-O2"])])


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
