import sys
from pathlib import Path

import numpy as np
import pytest

from endsum.corpus import NormalizerConfig

TESTS = Path(__file__).parent
sys.path.insert(0, str(TESTS))
GOLDEN = TESTS / "data" / "golden"


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def plain_config():
    """Identity lemmatization, no stopwords, stopword-fallback keywords."""
    return NormalizerConfig()


@pytest.fixture(scope="session")
def builtin_config():
    return NormalizerConfig.from_files()


@pytest.fixture
def golden_dir():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    rows, skipped = [], []
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(rep.user_properties)
            if "criterion" in props and rep.when == "call":
                rows.append((props["criterion"], outcome.upper()[:4]))
            elif outcome == "skipped" and "test_acceptance" in rep.nodeid:
                reason = rep.longrepr[2] if isinstance(rep.longrepr, tuple) else ""
                skipped.append(f"SKIP  {rep.nodeid.split('::')[-1]} ({reason.removeprefix('Skipped: ')})")
    if rows or skipped:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(rows, key=lambda r: int(r[0].split(".")[0])):
            terminalreporter.write_line(f"{status}  {name}")
        for line in skipped:
            terminalreporter.write_line(line)
