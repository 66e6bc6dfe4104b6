import pytest
from hypothesis import settings

from maxgenus import xuong_max_genus

from _corpus import connected_multigraphs_upto, random_corpus

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def exhaustive_corpus():
    """Every connected multigraph with m <= 7, one per iso class."""
    return connected_multigraphs_upto(7)


@pytest.fixture(scope="session")
def seeded_corpus():
    return random_corpus(500)


@pytest.fixture(scope="session")
def full_corpus(exhaustive_corpus, seeded_corpus):
    return exhaustive_corpus + seeded_corpus


@pytest.fixture(scope="session")
def corpus_gamma(full_corpus):
    """Exact maximum genus per corpus instance (spanning-tree oracle)."""
    return [xuong_max_genus(g)[0] for g in full_corpus]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
