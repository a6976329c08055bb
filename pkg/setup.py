"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python/numpy fallback is
selected at import time), but the compiled kernels make tree training and
simulation noticeably faster.  Build in place with:

    python setup.py build_ext --inplace
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "roadtriage._kernels._ckernels",
                ["src/roadtriage/_kernels/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                # -ffp-contract=off keeps float results bit-identical to the
                # pure-Python backend (no fused multiply-add reassociation).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
