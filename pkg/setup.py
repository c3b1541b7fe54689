from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install pure-Python only; coverscope._backend falls back.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("coverscope._speedups", ["src/coverscope/_speedups.pyx"])],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
