import sys

from setuptools import Extension, setup

ext_modules = []
if sys.byteorder == "little":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "chorba32._kernels",
                    ["src/chorba32/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # no Cython: install runs on the pure-Python kernels
        ext_modules = []

setup(ext_modules=ext_modules)
