from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "pimachine._core",
    sources=["python/module.cpp"] + sorted(glob("src/*.cpp")),
    include_dirs=["include"],
    libraries=["mpfr", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
