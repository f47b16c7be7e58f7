"""
Pytest configuration and fixtures for Rootboard
"""

import pytest
from fastapi.testclient import TestClient

from rootboard.main import app


def floor_sqrt(n: int) -> int:
    """Binary search on squares; the oracle every root is checked against"""
    low, high = 0, 1
    while high * high <= n:
        high *= 2
    while high - low > 1:
        middle = (low + high) // 2
        if middle * middle <= n:
            low = middle
        else:
            high = middle
    return low


@pytest.fixture
def client():
    """Create test client"""
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def worked_examples():
    """Worked examples with their expected (root, remainder)"""
    return {
        54756: (234, 0),
        41209: (203, 0),
        5290000: (2300, 0),
        249: (15, 24),
        5000000: (2236, 304),
        2: (1, 1),
        1: (1, 0),
        0: (0, 0),
    }
