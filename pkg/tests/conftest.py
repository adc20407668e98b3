import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fwythoff import compute_table


class TableBank:
    """Session-wide cache so the expensive strips are computed only once."""

    def __init__(self):
        self._tables = {}
        self._seconds = {}

    def get(self, variant, convention, a_max, b_max):
        key = (variant, convention, a_max, b_max)
        if key not in self._tables:
            start = time.perf_counter()
            self._tables[key] = compute_table(variant, convention, a_max, b_max)
            self._seconds[key] = time.perf_counter() - start
        return self._tables[key]

    def build_seconds(self, variant, convention, a_max, b_max):
        """Wall-clock seconds the strip took to fill (cached strips count once)."""
        return self._seconds[(variant, convention, a_max, b_max)]


@pytest.fixture(scope="session")
def tables():
    return TableBank()
