from pathlib import Path

import pytest

from app.catalog import load_catalog
from app.config import DEFAULT_FIXTURE_DIR, get_settings
from app.pcgroup import load_presentation, parse_presentation
from app.pgen import TreeNode

PRESENTATIONS = DEFAULT_FIXTURE_DIR / "presentations"

# <27,4> x C9; g1 and g4 have order 9
DIRECT_PRODUCT_243 = """\
3 5
1 1 2 1 2
g1^3 = g3
g4^3 = g5
[g2,g1] = g3
"""


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return DEFAULT_FIXTURE_DIR


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture
def group():
    """Stored presentation by file stem, e.g. group("27_3")."""
    def load(stem: str):
        return load_presentation(PRESENTATIONS / f"{stem}.pc", name=stem)
    return load


@pytest.fixture
def root(group):
    return TreeNode.root(group("9_2"), "<9,2>")


@pytest.fixture
def product_243():
    return parse_presentation(DIRECT_PRODUCT_243, name="27_4xC9")


@pytest.fixture
def settings_env(monkeypatch):
    """Set ARTIN_* variables for one test and rebuild the cached settings."""
    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"ARTIN_{key.upper()}", str(value))
        get_settings.cache_clear()
        return get_settings()
    yield apply
    monkeypatch.undo()
    get_settings.cache_clear()
