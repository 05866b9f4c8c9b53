import pytest

from groupcent import checks


@pytest.fixture(scope="session")
def catalog():
    return checks.default_catalog()


@pytest.fixture(scope="session")
def catalog_groups(catalog):
    """name -> built group, for every default catalog entry."""
    return {entry.name: entry.build() for entry in catalog}


@pytest.fixture(scope="session")
def suite_report():
    """One shared run of the full default suite."""
    return checks.run_suite()


def by_check(suite_report, check_id):
    return [r for r in suite_report.results if r.check_id == check_id]
