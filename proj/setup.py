"""Build the _linkforge extension by delegating to CMake."""

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
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        out_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        out_path.parent.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DLINKFORGE_PYTHON=ON",
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-DPython_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_linkforge",
             "-j", str(os.cpu_count() or 2)],
            check=True,
        )

        built = list(build_dir.glob("_linkforge*.so"))
        if not built:
            raise RuntimeError("cmake did not produce the _linkforge module")
        self.copy_file(str(built[0]), str(out_path))


setup(
    ext_modules=[CMakeExtension("linkforge._linkforge")],
    cmdclass={"build_ext": CMakeBuild},
)
