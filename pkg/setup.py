"""Build script for the compiled stepper kernel.

The package works without the extension (a pure-Python twin of the kernel
is selected at import time), but the compiled kernel is what makes large
optimization campaigns cheap. Build in place with:

    python setup.py build_ext --inplace
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffp-contract=off keeps C arithmetic bit-identical to the pure-Python
# twin (no fused multiply-add), which the backend parity tests rely on.
extensions = [
    Extension(
        "shiftcal._stepper_c",
        ["src/shiftcal/_stepper_c.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
