import pytest
from click.testing import CliRunner

from gwblowup.services.engine import EngineConfig, InvariantEngine
from gwblowup.store import MemoStore


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running acceptance checks")


@pytest.fixture
def runner() -> CliRunner:
    """Create CLI runner fixture."""
    return CliRunner()


@pytest.fixture(scope="session")
def shared_store() -> MemoStore:
    """Memo store reused by the shortcut-free engines of a session."""
    return MemoStore()


@pytest.fixture
def engine(shared_store: MemoStore) -> InvariantEngine:
    """Engine evaluating every key by recursion (no vanishing shortcuts)."""
    return InvariantEngine(shared_store, EngineConfig())


@pytest.fixture(scope="session")
def fast_engine() -> InvariantEngine:
    """Engine with the vanishing shortcuts on, for large degrees."""
    return InvariantEngine(config=EngineConfig(use_vanishing_shortcuts=True))
