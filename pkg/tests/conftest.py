import pytest

from src.config import get_settings
from src.core.generators import fixture
from src.core.graphs import UndirectedGraph
from src.core.partition import CliquePartition
from src.models.instance import Instance
from src.utils.decision_logger import reset_logger


def _descending_greedy(k: UndirectedGraph) -> CliquePartition:
    remaining = k.live
    cliques = []
    while remaining:
        seed = remaining.bit_length() - 1
        clique = 1 << seed
        candidates = k.adj[seed] & remaining
        while candidates:
            v = candidates.bit_length() - 1
            clique |= 1 << v
            candidates &= k.adj[v]
        cliques.append(clique)
        remaining &= ~clique
    return CliquePartition.from_masks(cliques)


@pytest.fixture(autouse=True)
def _fresh_state(monkeypatch, tmp_path):
    monkeypatch.setenv("UCIC_LOG_DIR", str(tmp_path / "logs"))
    get_settings.cache_clear()
    reset_logger()
    yield
    get_settings.cache_clear()
    reset_logger()


@pytest.fixture
def motivating() -> Instance:
    return fixture("motivating")


@pytest.fixture
def alice_bob() -> Instance:
    return fixture("alice-bob")


@pytest.fixture
def future_work() -> Instance:
    return fixture("future-work")


@pytest.fixture
def descending_greedy():
    """Greedy que semeia pelo maior id"""
    return _descending_greedy


@pytest.fixture
def multi_want() -> Instance:
    # c1 quer p1 e p2, tem p3; c2 quer p3, tem p1
    return Instance(
        n=2,
        k=3,
        has=(frozenset({2}), frozenset({0})),
        want=(frozenset({0, 1}), frozenset({2})),
    )
