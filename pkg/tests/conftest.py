from __future__ import annotations

import pytest

from mutvis.verify import named_corpus, random_corpus


@pytest.fixture(scope="session")
def corpus():
    """Named generator instances with order <= 12."""
    return list(named_corpus(12))


@pytest.fixture(scope="session")
def random_graphs():
    """Thirty seeded connected graphs with order <= 10."""
    return list(random_corpus(30, 10, 0))
