import pytest

from legendre_hgf.field import make_field

_FIELDS = {}


def field_for(p: int):
    """Session-shared fields; the dlog tables are immutable."""
    if p not in _FIELDS:
        _FIELDS[p] = make_field(p)
    return _FIELDS[p]


@pytest.fixture
def f5():
    return field_for(5)


@pytest.fixture
def f13():
    return field_for(13)


@pytest.fixture
def f17():
    return field_for(17)


@pytest.fixture
def f29():
    return field_for(29)
