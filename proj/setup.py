"""CMake-driven setuptools build for the python extension.

The canonical build system is CMake; this shim lets `pip install` (including
editable installs) reuse it by building the `_lhzsim` target and dropping the
resulting module into the wheel/package tree.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_dir = ext_path.parent
        ext_dir.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={ext_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DLHZ_BUILD_PYTHON=ON",
            "-DSKBUILD=ON",  # library-only configure: skip the test tree
            f"-DCMAKE_BUILD_TYPE={'Debug' if self.debug else 'Release'}",
        ]
        try:
            import pybind11

            cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass  # fall back to the system pybind11 config

        env = os.environ.copy()
        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_dir,
                       check=True, env=env)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_lhzsim",
             "--parallel", str(os.cpu_count() or 2)],
            cwd=build_dir, check=True, env=env)


setup(
    ext_modules=[CMakeExtension("lhzsim._lhzsim")],
    cmdclass={"build_ext": CMakeBuild},
)
