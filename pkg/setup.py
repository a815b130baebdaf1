import os

from setuptools import Extension, setup

# Set SEMIPROB_NO_EXT=1 to install the pure-Python package only.
ext_modules = []
if not os.environ.get("SEMIPROB_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "semiprob._speedups",
                ["src/semiprob/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
