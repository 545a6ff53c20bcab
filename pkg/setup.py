"""Build script: compiles the optional counting kernel.

The package works without the extension (the oracle falls back to the
pure-Python kernel); building it makes the large cross-check matrices run
orders of magnitude faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "sgchrom._count_cy",
                ["src/sgchrom/_count_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
