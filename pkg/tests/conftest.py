import pytest

from solvrad import build_bsgs, conjugacy_classes, construct


@pytest.fixture(scope="session")
def group_of():
    """Session-cached group builder keyed by spec text."""
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = build_bsgs(construct(spec))
        return cache[spec]

    return get


@pytest.fixture(scope="session")
def classes_of(group_of):
    cache = {}

    def get(spec, cap=200_000):
        if spec not in cache:
            cache[spec] = conjugacy_classes(group_of(spec), cap)
        return cache[spec]

    return get


@pytest.fixture(scope="session")
def sz8(group_of):
    return group_of("file:sz8.json")


@pytest.fixture(scope="session")
def sz8_classes(sz8, classes_of):
    return classes_of("file:sz8.json", 50_000)
