import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package still works without the compiled core; a pure-Python
    # fallback is selected at import time.
    cythonize = None

if cythonize is None or not os.path.exists("src/nullumbilics/_kernel_c.pyx"):
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("nullumbilics._kernel_c", ["src/nullumbilics/_kernel_c.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
