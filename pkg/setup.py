import cx_Freeze
from setuptools import find_packages

executables = [cx_Freeze.Executable("main.py", target_name="resyn")]

build_exe_options = {
    "packages": ["numpy"],
    "excludes": ["torch", "scipy", "matplotlib"],
    "include_files": ["data/"]
}

cx_Freeze.setup(
    name="resyn",
    version="0.1.0",
    description="Recursive regex synthesis from examples",
    packages=find_packages(exclude=["test"]),
    install_requires=["numpy"],
    options={
        "build_exe": build_exe_options,
        # setuptools' editable build reinitializes build_exe and looks its
        # options up under the class name, which cx_Freeze 6.15 leaves unset
        "BuildEXE": build_exe_options,
    },
    executables=executables,
)
