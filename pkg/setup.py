from setuptools import setup, Extension

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "colorcomplex._speedups",
                ["src/colorcomplex/_speedups.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # Without Cython the package installs pure-Python only; the rank
    # backend falls back automatically at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
