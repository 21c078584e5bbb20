from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "exactldu._core",
    sources=[
        "bindings/py_ldu.cpp",
        "src/counters.cpp",
        "src/factorize.cpp",
        "src/gen.cpp",
        "src/io.cpp",
        "src/oracle.cpp",
        "src/ring.cpp",
        "src/wperm.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
