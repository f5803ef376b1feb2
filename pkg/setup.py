import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "cvxpolar._gridkern",
        ["src/cvxpolar/_gridkern.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

# The compiled kernels are optional: cvxpolar.backend falls back to the
# pure-numpy implementation when the extension is absent.
setup(
    ext_modules=cythonize(extensions, language_level=3) if cythonize else [],
)
