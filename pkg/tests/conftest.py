import pytest

from helpers import path


@pytest.fixture
def fig1():
    """Weighted P4 with weights 1, 1.5, 1 at scale 2."""
    return path([2, 3, 2])
