"""Build the optional compiled kernel extension.

The package works without it (a numpy fallback is selected at import);
the extension only speeds up the hot attention/matmul loops.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "segfree.kernels._ckern",
        sources=["src/segfree/kernels/_ckern.pyx"],
        extra_compile_args=["-O3"],
    )
    ext.optional = True  # fall back to the numpy backend if the build fails
    ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
