"""Build glue that drives the CMake project from setuptools.

The extension module is compiled by the regular CMake build (target
``polarcalc_pymod``) and the resulting shared object is copied to wherever
setuptools expects it. Needs a working C++20 toolchain, CMake, GMP with its
C++ wrapper, and pybind11 importable from the running interpreter.
"""

import pathlib
import shutil
import subprocess
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension

HERE = pathlib.Path(__file__).resolve().parent


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        build_dir = pathlib.Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(HERE),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DPOLARCALC_BUILD_TESTS=OFF",
                "-DPOLARCALC_BUILD_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir),
             "--target", "polarcalc_pymod", "--parallel"],
            check=True,
        )

        # The CMake build stages the module under <build>/python/polarcalc.
        staged = list((build_dir / "python" / "polarcalc").glob("_core.*"))
        if not staged:
            raise RuntimeError("CMake did not produce the _core extension")
        target = pathlib.Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(staged[0], target)


setup(
    ext_modules=[CMakeExtension("polarcalc._core")],
    cmdclass={"build_ext": CMakeBuild},
)
