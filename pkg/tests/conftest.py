import pytest

from ybe.enumeration import enumerate_square_free
from ybe.rewriting import find_skew_ordering
from ybe.samples import sample_registry


@pytest.fixture(scope="session")
def samples():
    return sample_registry()


@pytest.fixture(scope="session")
def catalog():
    """Complete catalogs for n = 1..4, built once."""
    return {n: enumerate_square_free(n) for n in range(1, 5)}


@pytest.fixture(scope="session")
def presentations(samples):
    """Certified presentations for the fixtures that admit one."""
    out = {}
    for key in ("n2-trivial", "n3", "n4", "gen11", "n10-sylow", "n10-level3"):
        search = find_skew_ordering(samples[key])
        assert search.ok, key
        out[key] = search.presentation
    return out
