"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension (mirrorhull.kernels._native).
If Cython or a C compiler is unavailable the extension is skipped and the numpy
fallback kernels are used at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mirrorhull.kernels._native",
                sources=["src/mirrorhull/kernels/_native.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
