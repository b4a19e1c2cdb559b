import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

CORPUS_BOUND = 60


@pytest.fixture(scope="session")
def corpus4():
    """Every minimal 4-generated semigroup with n4 <= 60, classified by the oracle."""
    out = []
    for gens in oracles.four_generated(CORPUS_BOUND):
        info = oracles.classify(gens)
        info.pop("bits")
        out.append((gens, info))
    return out


@pytest.fixture(scope="session")
def almost_symmetric4(corpus4):
    return [(g, i) for g, i in corpus4 if i["classification"] != "none"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.TITLES):
        terminalreporter.line(results.get(k, f"criterion {k:2d} NOT RUN  {mod.TITLES[k]}"))
