from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "wynnpade._core",
        sources=[
            "bindings/pymodule.cpp",
            "src/aitken.cpp",
            "src/io.cpp",
            "src/npade.cpp",
            "src/ode.cpp",
            "src/series.cpp",
            "src/stats.cpp",
        ],
        include_dirs=["include", "vendor"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
