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
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_optnet", "-j", str(os.cpu_count() or 2)],
            cwd=build_dir,
            check=True,
        )
        self.copy_tree(str(build_dir / "python" / "optnet"), str(out_dir))


setup(
    packages=["optnet"],
    package_dir={"optnet": "python/optnet"},
    ext_modules=[CMakeExtension("optnet._optnet")],
    cmdclass={"build_ext": CMakeBuild},
)
