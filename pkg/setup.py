from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The extension accelerates the bulk kernels; the package falls back to the
# pure NumPy module when it is unavailable, so the build is best-effort.
ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "hiernet._kernels",
                ["src/hiernet/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
