import pytest

from mulpersist.catalog import catalog_by_id
from mulpersist.rhs_index import main_index


@pytest.fixture(scope="session")
def index():
    return main_index()


@pytest.fixture(scope="session")
def catalog():
    return catalog_by_id()


def record_rows(sset):
    """Normalize a SolutionSet into corpus-comparable tuples."""
    return sorted(
        (r.a, r.u, r.w, r.status if r.status != "dismissed" else r.reason)
        for r in sset.records)
