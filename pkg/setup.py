"""Build hook for the optional compiled bit kernel.

The package is pure Python; if Cython is available the hot loops in
streamdeg._bitkernel are compiled, otherwise the install silently falls
back to streamdeg._bitkernel_py (selected at import time in _kernel.py).
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/streamdeg/_bitkernel.pyx"],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
