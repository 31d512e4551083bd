"""
Shared pytest configuration
"""
import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: Monte Carlo checks that take more than a few seconds")


@pytest.fixture
def tmp_output(tmp_path, monkeypatch):
    """Point the global output directory at a temporary folder"""
    from rmt_lab.config import config as rmt_config

    monkeypatch.setattr(rmt_config.output, "output_dir", tmp_path)
    return tmp_path
