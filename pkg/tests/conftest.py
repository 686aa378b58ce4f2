"""Pytest configuration and fixtures."""

from typing import Dict

import pytest

from src.config import set_config
from src.core.entities import FourRegularGraph

from .corpus import (
    ABAB_FRG,
    TWO_LOOP_FRG,
    complete_graph_k5,
    graph_from_text,
    graph_from_word,
    small_corpus,
)


@pytest.fixture(autouse=True)
def fresh_config():
    """Every test starts from default settings."""
    set_config(None)
    yield
    set_config(None)


@pytest.fixture
def abab() -> FourRegularGraph:
    return graph_from_text(ABAB_FRG)


@pytest.fixture
def two_loop() -> FourRegularGraph:
    return graph_from_text(TWO_LOOP_FRG)


@pytest.fixture
def aabb() -> FourRegularGraph:
    return graph_from_word("a a b b")


@pytest.fixture
def doubled_triangle() -> FourRegularGraph:
    return graph_from_word("a b c a b c")


@pytest.fixture
def k5() -> FourRegularGraph:
    return complete_graph_k5()


@pytest.fixture
def corpus() -> Dict[str, FourRegularGraph]:
    return small_corpus()


@pytest.fixture
def temp_dir(tmp_path):
    """A fresh directory for files written by a test."""
    return tmp_path
