import os
import shutil

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("LAMBDAG_CLI") or shutil.which("lambdag")
    if not path:
        pytest.skip("lambdag executable not found (set LAMBDAG_CLI)")
    return path
