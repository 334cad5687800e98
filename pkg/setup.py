from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("uniwiener._fastcore", ["src/uniwiener/_fastcore.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: install with the pure-Python kernels only.
    ext_modules = []

setup(ext_modules=ext_modules)
