import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from slowcolor.solver import SolverCache


@pytest.fixture(scope="session")
def cache():
    """One shared value cache so the suite reuses solved positions."""
    return SolverCache()
