import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GRIDWORD_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gridword._kernels._speedups",
                    ["src/gridword/_kernels/_speedups.pyx"],
                    include_dirs=[np.get_include()],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython at build time: the package still works on the pure
        # numpy kernels selected at import.
        ext_modules = []

setup(ext_modules=ext_modules)
