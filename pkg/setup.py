"""Build script: compiles the optional Cython kernel.

The compiled module `imbessel._kernel` accelerates the coefficient
recurrence / series accumulation loop.  If Cython (or a C compiler) is
unavailable the build proceeds without it and the package falls back to
the pure-Python kernel at import time.

Note: -ffp-contract=off keeps the compiled kernel bit-identical to the
pure-Python fallback (no fused multiply-add reassociation).
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "imbessel._kernel",
                ["src/imbessel/_kernel.pyx"],
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
