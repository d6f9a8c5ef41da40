"""Builds the optional compiled intersection kernel.

Without Cython or a C compiler the package still installs; ``onevis.kernels``
then falls back to the NumPy implementation.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "onevis._naive",
                ["src/onevis/_naive.pyx"],
                include_dirs=[numpy.get_include()],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
