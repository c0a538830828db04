import hypothesis
import pytest

from toricample import catalog

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture
def p2():
    return catalog.p2()


@pytest.fixture
def p1xp1():
    return catalog.p1xp1()


@pytest.fixture
def f1():
    return catalog.f1()


@pytest.fixture
def p3():
    return catalog.projective_space(3)
