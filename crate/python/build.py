"""Builds the extension module with cargo and copies it next to this script."""

import shutil
import subprocess
import sys
import sysconfig
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "frac-bernoulli-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = {"darwin": "libfrac_bernoulli_py.dylib", "win32": "frac_bernoulli_py.dll"}.get(
        sys.platform, "libfrac_bernoulli_py.so"
    )
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    target = Path(__file__).resolve().parent / f"frac_bernoulli_py{suffix}"
    shutil.copyfile(ROOT / "target" / "release" / lib, target)
    print(target)


if __name__ == "__main__":
    main()
