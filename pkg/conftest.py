import json
import random
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent
SETTINGS_PATH = ROOT / "src" / "config" / "settings.yaml"
FIXTURES_PATH = ROOT / "src" / "config" / "published_tables.yaml"


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def settings_path() -> Path:
    return SETTINGS_PATH


@pytest.fixture
def fixtures_path() -> Path:
    return FIXTURES_PATH


@pytest.fixture
def write_graph(tmp_path):
    """Write a graph JSON file from an adjacency list and return its path."""
    def _write(adjacency, name="g.json", **extra):
        payload = {"rows": len(adjacency), "cols": len(adjacency[0]) if adjacency else 0, "adjacency": adjacency}
        payload.update(extra)
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path
    return _write


@pytest.fixture
def a11_adjacency():
    """Bipartite halves of the path on 11 vertices: odd vertices as rows, even as columns."""
    rows, cols = 6, 5
    adj = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            if abs((2 * i + 1) - (2 * j + 2)) == 1:
                adj[i][j] = 1
    return adj
