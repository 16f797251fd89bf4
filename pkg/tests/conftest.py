"""
Pytest configuration and fixtures for tailspan tests.
"""

import sys
from pathlib import Path

# Add repo root (for analyze_tails) and src directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

import numpy as np
import pytest


@pytest.fixture(autouse=True)
def fresh_config():
    """Reload the repo config.yaml around every test so overrides do not leak."""
    from config import ConfigManager

    ConfigManager.reload(str(Path(__file__).parent.parent / 'config.yaml'))
    yield
    ConfigManager._instance = None


@pytest.fixture
def rng():
    """Seeded PCG64 generator."""
    return np.random.default_rng(20240526)


@pytest.fixture
def random_complex(rng):
    """Factory for seeded random complex arrays of a given length."""
    def make(n: int) -> np.ndarray:
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return make


@pytest.fixture
def simple_csv(tmp_path):
    """Three-row file with header 'a'."""
    path = tmp_path / "simple.csv"
    path.write_text("a\n1\n2\n3\n")
    return path


@pytest.fixture
def labelled_csv(tmp_path):
    """Dated series with a label column and a value column."""
    path = tmp_path / "labelled.csv"
    path.write_text(
        "date,rate,other\n"
        "2020-01-01,1.5,x\n"
        "2020-01-02,2.5,y\n"
        "2020-01-03,3.0,z\n"
        "2020-01-04,2.0,w\n"
    )
    return path


@pytest.fixture
def missing_csv(tmp_path):
    """Series with a missing cell in row 1."""
    path = tmp_path / "missing.csv"
    path.write_text("v\n1\n\n3\n4\n")
    return path


@pytest.fixture
def wave_csv(tmp_path):
    """Real series of length 64: a slow cosine plus a small spike train."""
    n = 64
    x = np.arange(n)
    values = 2.0 + np.cos(2 * np.pi * 3 * x / n) + 0.5 * (x % 16 == 0)
    path = tmp_path / "wave.csv"
    lines = ["t,value"] + [f"{i},{v!r}" for i, v in enumerate(values.tolist())]
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture
def constant_csv(tmp_path):
    """Constant series of length 16."""
    path = tmp_path / "constant.csv"
    path.write_text("v\n" + "1.0\n" * 16)
    return path
