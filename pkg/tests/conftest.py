from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from onevis.generators import embedding_from_drawing  # noqa: E402


def drawing(pos, edges, crossings=None, outer_dart=None):
    return embedding_from_drawing(len(pos), edges, pos, crossings, outer_dart)


@pytest.fixture
def triangle():
    return drawing([(0, 0), (4, 0), (2, 4)], [(0, 1), (1, 2), (0, 2)], outer_dart=0)


@pytest.fixture
def c4():
    return drawing([(0, 0), (4, 0), (4, 4), (0, 4)], [(0, 1), (1, 2), (2, 3), (3, 0)], outer_dart=0)


@pytest.fixture
def k4():
    return drawing(
        [(0, 0), (8, 0), (4, 8), (4, 3)], [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)], outer_dart=0
    )


@pytest.fixture
def k5_one_crossing():
    # outer triangle with two inner vertices; (0,4) crosses (1,3)
    pos = [(0, 0), (12, 0), (6, 12), (4, 4), (8, 4)]
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    return drawing(pos, edges, outer_dart=0)


@pytest.fixture
def cube():
    pos = [(0, 0), (8, 0), (8, 8), (0, 8), (2, 2), (6, 2), (6, 6), (2, 6)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]
    return drawing(pos, edges, outer_dart=0)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
