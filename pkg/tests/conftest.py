from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import sedgraph as sg


@pytest.fixture(scope="session")
def seed_path() -> Path:
    return sg.seed_lexicon_path()


@pytest.fixture(scope="session")
def seed_graph(seed_path) -> sg.LexicalGraph:
    graph, report = sg.load_lexicon(seed_path)
    assert report.ok, list(report)
    return graph


GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR
