"""Build script: compiles the optional fast-kernel extension when Cython is around.

Without Cython or a C compiler the install still succeeds and the package
falls back to the numpy kernels at import time.
"""

from setuptools import Extension, setup

extensions = []
try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "sievelab._kernels",
                ["src/sievelab/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=extensions)
