import os
import sys

import pytest

# The built package lives in the CMake build tree; scikit-build-core wheels
# install the same layout.
_pkg_dir = os.environ.get("PLQI_PYTHON_DIR")
if _pkg_dir and _pkg_dir not in sys.path:
    sys.path.insert(0, _pkg_dir)


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("PLQI_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("PLQI_CLI does not point at the built binary")
    return path
