from pathlib import Path

import pytest

from roughmap import document

DATA = Path(__file__).parent / "data"


@pytest.fixture
def example():
    """The seven-element space with mappings f1, f2, f3 into six elements."""
    return document.load(DATA / "seven_point.json")


@pytest.fixture
def three_point():
    """Three-element space x, y, z with R = {(x, y)} and f onto {a, b}."""
    return document.load(DATA / "three_point.json")


@pytest.fixture
def data_dir():
    return DATA
