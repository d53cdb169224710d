import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # build the pure-Python package only
    cythonize = None

ext_modules = []
if cythonize is not None and os.environ.get("SL21INV_NO_EXT") != "1":
    ext_modules = cythonize(
        [Extension(
            "sl21inv.ring._ckernel",
            ["src/sl21inv/ring/_ckernel.pyx"],
            language="c++",
            extra_compile_args=["-O3", "-std=c++17"],
        )],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
