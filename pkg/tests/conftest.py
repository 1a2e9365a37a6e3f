import pytest
from hypothesis import settings

from snerve.harness.corpus import build_as, corpus
from snerve.types.enum import FixtureKind

settings.register_profile('snerve', max_examples=30, deadline=None)
settings.load_profile('snerve')


@pytest.fixture
def build():
    """``build(name, kind, cap)`` for corpus fixtures."""
    def _build(name, kind, cap=2, base=None):
        return build_as(name, FixtureKind(kind), cap, base)
    return _build


@pytest.fixture
def bz2():
    return build_as('bz2', FixtureKind.monoidal, 2)


@pytest.fixture
def point_monoidal():
    return build_as('point', FixtureKind.monoidal, 2)


def fixture_names(kind, valid=True):
    return [name for name, entry in corpus().items() if entry.kind == FixtureKind(kind) and entry.valid == valid]
