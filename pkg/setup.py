from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip the compiled kernels when no compiler or Cython is available."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self.warn(f"compiled kernels not built ({exc}); using the pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self.warn(f"skipping {ext.name}: {exc}")


try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("hermitian_cascade._kernels", ["src/hermitian_cascade/_kernels.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
