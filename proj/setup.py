import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    """Drive the project's CMake build and copy the extension into place."""

    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
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
            ["cmake", "--build", ".", "--target", "_eideal", "--parallel"],
            cwd=build_dir,
            check=True,
        )
        built = sorted((build_dir / "python" / "eideal").glob("_eideal.*"))
        if not built:
            raise RuntimeError("CMake did not produce the _eideal extension")
        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(built[-1].read_bytes())


setup(
    ext_modules=[CMakeExtension("eideal._eideal")],
    cmdclass={"build_ext": CMakeBuild},
)
