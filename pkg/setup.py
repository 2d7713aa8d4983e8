import os

from setuptools import setup

ext_modules = []
if os.environ.get("VOIDFINDER_NO_EXT") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "voidfinder._kernels._native",
                    sources=["src/voidfinder/_kernels/_native.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    # no FP contraction: distances must match the numpy
                    # fallback bit for bit so tie handling is identical
                    extra_compile_args=["-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython/numpy at build time: install pure-Python only, the
        # package falls back to the numpy kernels at import.
        ext_modules = []

setup(ext_modules=ext_modules)
