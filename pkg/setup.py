# Builds the optional compiled kernels; the package falls back to pure Python
# when the extension is missing (see nodalspec/_kernels/__init__.py).
import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("NODALSPEC_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        extensions = [
            Extension(
                "nodalspec._kernels._core",
                ["src/nodalspec/_kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ]
        ext_modules = cythonize(
            extensions,
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except Exception as exc:  # pragma: no cover - build-time only
        print(f"nodalspec: compiled kernels disabled ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
