from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "factgraph._kernels._fast",
                ["src/factgraph/_kernels/_fast.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython at build time: the package still works on the pure backend.
    extensions = []

setup(ext_modules=extensions)
