import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from splitfactor import SplitGraph


@pytest.fixture
def demo_graph() -> SplitGraph:
    """Clique {x,y,z,t}, independent {1,2,3,4}, five 2-switches total."""
    return SplitGraph.from_neighborhoods(
        clique=["x", "y", "z", "t"],
        neighborhoods={"1": {"x"}, "2": {"y"}, "3": {"x", "z"}, "4": {"x", "y", "t"}},
    )
