import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest  # noqa: E402

from chiralbwb.rootdata import build_root_system  # noqa: E402


@pytest.fixture(scope="session")
def rs_cache():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build_root_system(name)
        return cache[name]

    return get
