import pytest

from qlca import entry_label, standard_entries


def catalog_cases():
    return [pytest.param(e, id=entry_label(e)) for e in standard_entries()]


@pytest.fixture(params=catalog_cases())
def catalog_entry(request):
    return request.param


@pytest.fixture
def catalog_algebra(catalog_entry):
    return catalog_entry.build()
