import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    exts = cythonize(
        [
            Extension(
                "subsetcf._kernels",
                ["src/subsetcf/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # No Cython: install the pure-Python fallback only.
    exts = []

setup(ext_modules=exts)
