"""Build script: compiles the optional Cython kernel.

The extension is a pure speedup; if Cython or a C compiler is missing the
install still succeeds and the package falls back to the Python kernel
(see skeincalc._backend).
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            print(f"warning: skipping compiled kernel ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); pure-Python fallback will be used")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("skeincalc._ckernel", ["src/skeincalc/_ckernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
