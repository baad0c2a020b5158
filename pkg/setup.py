from setuptools import setup

# The compiled kernel is optional: if Cython (or a C compiler) is missing the
# package falls back to the pure-Python kernels at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/origami_veech/_kernel_cy.pyx"], language_level=3
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
