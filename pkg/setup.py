"""Build script: compiles the optional PPM kernel extension.

The package works without the extension (a pure-Python engine is selected at
import time), so a failed compile must not break installation.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "acromine._ppm_kernel",
                ["src/acromine/_ppm_kernel.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
